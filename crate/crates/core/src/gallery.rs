//! Named example cells, and the [`Collection`] type used to hand a set of
//! named cells to the law suites.

use crate::algstruct::{
    augmentation, cyclic_group_bialgebra, group_algebra, grouplike_coalgebra, matrix_algebra,
    matrix_coalgebra, Algebra, Coalgebra,
};
use crate::entwcat::{
    bialgebra_entwining, comodule_one_cell, flip_entwining, identity_one_cell, identity_two_cell,
    module_one_cell, morphism_one_cell, scalar_two_cell, trivial_object, EntwObj, EntwOneCell,
    EntwTwoCell,
};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};

#[derive(Clone, Debug)]
pub struct NamedObj {
    pub name: String,
    pub algebra: String,
    pub coalgebra: String,
    pub obj: EntwObj,
}

#[derive(Clone, Debug)]
pub struct NamedOneCell {
    pub name: String,
    pub dom: String,
    pub cod: String,
    pub cell: EntwOneCell,
}

#[derive(Clone, Debug)]
pub struct NamedTwoCell {
    pub name: String,
    pub dom: String,
    pub cod: String,
    pub cell: EntwTwoCell,
}

/// Named algebras, coalgebras and entwining cells over one field, with every
/// reference resolved.
#[derive(Clone, Debug)]
pub struct Collection {
    pub field: Field,
    pub algebras: Vec<(String, Algebra)>,
    pub coalgebras: Vec<(String, Coalgebra)>,
    pub objects: Vec<NamedObj>,
    pub one_cells: Vec<NamedOneCell>,
    pub two_cells: Vec<NamedTwoCell>,
}

impl Collection {
    pub fn new(field: Field) -> Collection {
        Collection {
            field,
            algebras: Vec::new(),
            coalgebras: Vec::new(),
            objects: Vec::new(),
            one_cells: Vec::new(),
            two_cells: Vec::new(),
        }
    }

    pub fn object(&self, name: &str) -> Option<&NamedObj> {
        self.objects.iter().find(|o| o.name == name)
    }

    pub fn one_cell(&self, name: &str) -> Option<&NamedOneCell> {
        self.one_cells.iter().find(|c| c.name == name)
    }

    pub fn two_cell(&self, name: &str) -> Option<&NamedTwoCell> {
        self.two_cells.iter().find(|c| c.name == name)
    }

    /// The name of an object structurally equal to `obj`.
    pub fn name_of_object(&self, obj: &EntwObj) -> Option<&str> {
        self.objects
            .iter()
            .find(|o| &o.obj == obj)
            .map(|o| o.name.as_str())
    }

    pub fn name_of_one_cell(&self, cell: &EntwOneCell) -> Option<&str> {
        self.one_cells
            .iter()
            .find(|c| &c.cell == cell)
            .map(|c| c.name.as_str())
    }

    fn add_algebra(&mut self, name: &str, a: Algebra) {
        self.algebras.push((name.to_string(), a));
    }

    fn add_coalgebra(&mut self, name: &str, c: Coalgebra) {
        self.coalgebras.push((name.to_string(), c));
    }

    fn algebra(&self, name: &str) -> &Algebra {
        &self
            .algebras
            .iter()
            .find(|(n, _)| n == name)
            .expect("known algebra")
            .1
    }

    fn coalgebra(&self, name: &str) -> &Coalgebra {
        &self
            .coalgebras
            .iter()
            .find(|(n, _)| n == name)
            .expect("known coalgebra")
            .1
    }

    fn add_object(&mut self, name: &str, algebra: &str, coalgebra: &str, obj: EntwObj) {
        self.objects.push(NamedObj {
            name: name.to_string(),
            algebra: algebra.to_string(),
            coalgebra: coalgebra.to_string(),
            obj,
        });
    }

    /// Adds a 1-cell, naming its endpoints by lookup.
    pub fn push_one_cell(&mut self, name: &str, cell: EntwOneCell) -> Result<()> {
        let dom = self.name_of_object(cell.dom()).map(str::to_string);
        let cod = self.name_of_object(cell.cod()).map(str::to_string);
        match (dom, cod) {
            (Some(dom), Some(cod)) => {
                self.one_cells.push(NamedOneCell {
                    name: name.to_string(),
                    dom,
                    cod,
                    cell,
                });
                Ok(())
            }
            _ => Err(Error::InvalidParameter(format!(
                "1-cell {name} has an endpoint outside the collection"
            ))),
        }
    }

    pub fn push_two_cell(&mut self, name: &str, cell: EntwTwoCell) -> Result<()> {
        let dom = self.name_of_one_cell(cell.dom()).map(str::to_string);
        let cod = self.name_of_one_cell(cell.cod()).map(str::to_string);
        match (dom, cod) {
            (Some(dom), Some(cod)) => {
                self.two_cells.push(NamedTwoCell {
                    name: name.to_string(),
                    dom,
                    cod,
                    cell,
                });
                Ok(())
            }
            _ => Err(Error::InvalidParameter(format!(
                "2-cell {name} has an endpoint outside the collection"
            ))),
        }
    }

    /// Pairs `(p, m)` with `cod(m) = dom(p)`, by name.
    pub fn composable_pairs(&self) -> Vec<(&NamedOneCell, &NamedOneCell)> {
        let mut out = Vec::new();
        for p in &self.one_cells {
            for m in &self.one_cells {
                if m.cod == p.dom {
                    out.push((p, m));
                }
            }
        }
        out
    }

    /// Triples `(q, p, m)` with `q ∘ p ∘ m` defined.
    pub fn composable_triples(&self) -> Vec<(&NamedOneCell, &NamedOneCell, &NamedOneCell)> {
        let mut out = Vec::new();
        for (p, m) in self.composable_pairs() {
            for q in &self.one_cells {
                if q.dom == p.cod {
                    out.push((q, p, m));
                }
            }
        }
        out
    }
}

/// The built-in examples.
///
/// Objects: the trivial entwining, flips over group, matrix and grouplike
/// structures, and the bialgebra entwinings of `k[C_2]` and `k[C_3]` (that
/// of `k[C_1]` is the trivial entwining).
/// 1-cells: identities, morphism cells between flips, and the regular
/// module and comodule of `k[C_2]` linking its bialgebra entwining with the
/// trivial one. 2-cells: identities, scalars and a few equivariant maps.
pub fn gallery(field: Field) -> Result<Collection> {
    let mut g = Collection::new(field);
    g.add_algebra("k", Algebra::base_field(field));
    g.add_algebra("kC2", group_algebra(field, 2)?);
    g.add_algebra("M2", matrix_algebra(field, 2)?);
    g.add_coalgebra("k", Coalgebra::base_field(field));
    g.add_coalgebra("gl2", grouplike_coalgebra(field, 2)?);
    g.add_coalgebra("gl3", grouplike_coalgebra(field, 3)?);
    g.add_coalgebra("Mc2", matrix_coalgebra(field, 2)?);
    let (c3, c3co) = cyclic_group_bialgebra(field, 3)?;
    g.add_algebra("kC3", c3);
    g.add_coalgebra("kC2co", cyclic_group_bialgebra(field, 2)?.1);
    g.add_coalgebra("kC3co", c3co);

    g.add_object("trivial", "k", "k", trivial_object(field));
    let flips = [
        ("flip_kC2_Mc2", "kC2", "Mc2"),
        ("flip_M2_gl3", "M2", "gl3"),
        ("flip_kC2_gl2", "kC2", "gl2"),
        ("flip_k_gl2", "k", "gl2"),
    ];
    for (name, a, c) in flips {
        let obj = flip_entwining(g.algebra(a), g.coalgebra(c))?;
        g.add_object(name, a, c, obj);
    }
    for n in 2..=3 {
        let (an, cn) = (format!("kC{n}"), format!("kC{n}co"));
        let obj = bialgebra_entwining(g.algebra(&an), g.coalgebra(&cn))?;
        g.add_object(&format!("bialg_C{n}"), &an, &cn, obj);
    }

    let objects: Vec<(String, EntwObj)> = g
        .objects
        .iter()
        .map(|o| (o.name.clone(), o.obj.clone()))
        .collect();
    for (name, obj) in &objects {
        g.push_one_cell(&format!("id_{name}"), identity_one_cell(obj))?;
    }

    let flip_c2 = g.object("flip_kC2_gl2").expect("added above").obj.clone();
    let flip_k = g.object("flip_k_gl2").expect("added above").obj.clone();
    let bialg_c2 = g.object("bialg_C2").expect("added above").obj.clone();
    let id2 = Matrix::identity(field, 2);
    let aug = morphism_one_cell(&flip_k, &flip_c2, &augmentation(field, 2), &id2)?;
    g.push_one_cell("aug", aug)?;
    let negate = Matrix::from_i64(field, &[&[1, 0], &[0, -1]]);
    let swap = Matrix::from_i64(field, &[&[0, 1], &[1, 0]]);
    let twist = morphism_one_cell(&flip_c2, &flip_c2, &negate, &swap)?;
    g.push_one_cell("twist", twist)?;
    let comod = comodule_one_cell(&bialg_c2, bialg_c2.coalgebra().comult())?;
    g.push_one_cell("comod_C2", comod.clone())?;
    let module = module_one_cell(&bialg_c2, bialg_c2.algebra().mult())?;
    g.push_one_cell("mod_C2", module.clone())?;
    let sign = module_one_cell(&bialg_c2, &Matrix::from_i64(field, &[&[1, -1]]))?;
    g.push_one_cell("mod_sign", sign.clone())?;

    for name in ["id_bialg_C2", "twist", "mod_C2", "comod_C2"] {
        let cell = g.one_cell(name).expect("added above").cell.clone();
        g.push_two_cell(&format!("1_{name}"), identity_two_cell(&cell))?;
    }
    g.push_two_cell("two_mod_C2", scalar_two_cell(&field.from_i64(2), &module))?;
    g.push_two_cell(
        "to_sign",
        EntwTwoCell::new(module.clone(), sign, Matrix::from_i64(field, &[&[1, -1]]))?,
    )?;
    g.push_two_cell(
        "right_mult_g",
        EntwTwoCell::new(module.clone(), module, swap)?,
    )?;
    g.push_two_cell(
        "diag_comod",
        EntwTwoCell::new(
            comod.clone(),
            comod,
            Matrix::from_i64(field, &[&[1, 0], &[0, 2]]),
        )?,
    )?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entwcat::{check_obj, check_one_cell, check_two_cell};

    #[test]
    fn every_gallery_entry_passes() {
        for field in [Field::Rational, Field::prime(5).unwrap()] {
            let g = gallery(field).unwrap();
            assert_eq!(g.objects.len(), 7);
            for o in &g.objects {
                assert!(check_obj(&o.obj).passed(), "{}", o.name);
            }
            for c in &g.one_cells {
                assert!(check_one_cell(&c.cell).passed(), "{}", c.name);
            }
            for t in &g.two_cells {
                assert!(check_two_cell(&t.cell).passed(), "{}", t.name);
            }
        }
    }

    #[test]
    fn composable_shapes() {
        let g = gallery(Field::Rational).unwrap();
        let pairs = g.composable_pairs();
        assert!(pairs
            .iter()
            .any(|(p, m)| p.name == "mod_C2" && m.name == "comod_C2"));
        assert!(pairs
            .iter()
            .any(|(p, m)| p.name == "twist" && m.name == "aug"));
        assert!(!pairs
            .iter()
            .any(|(p, m)| p.name == "aug" && m.name == "twist"));
        assert!(!g.composable_triples().is_empty());
    }
}
