//! Typed workspaces: every matrix parsed, every reference resolved.

use std::collections::BTreeMap;

use entwine_core::gallery::{Collection, NamedObj, NamedOneCell, NamedTwoCell};
use entwine_core::{
    Algebra, Bimodule, Coalgebra, CorOneCell, CorTwoCell, Coring, EntwObj, EntwOneCell,
    EntwTwoCell, Field, Matrix,
};

use crate::format::{
    AlgebraDoc, CoalgebraDoc, CorOneCellDoc, CorTwoCellDoc, CoringDoc, EntwiningDoc, FieldDoc,
    MatrixDoc, OneCellDoc, TwoCellDoc, WorkspaceDoc,
};
use crate::CliError;

#[derive(Clone, Debug, PartialEq)]
pub struct ObjEntry {
    pub algebra: String,
    pub coalgebra: String,
    pub obj: EntwObj,
}

/// A cell with named endpoints and an optional provenance link.
#[derive(Clone, Debug, PartialEq)]
pub struct CellEntry<T> {
    pub source: Option<String>,
    pub dom: String,
    pub cod: String,
    pub cell: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoringEntry {
    pub source: Option<String>,
    pub base: String,
    pub coring: Coring,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Workspace {
    pub field: Field,
    pub algebras: BTreeMap<String, Algebra>,
    pub coalgebras: BTreeMap<String, Coalgebra>,
    pub entwinings: BTreeMap<String, ObjEntry>,
    pub one_cells: BTreeMap<String, CellEntry<EntwOneCell>>,
    pub two_cells: BTreeMap<String, CellEntry<EntwTwoCell>>,
    pub corings: BTreeMap<String, CoringEntry>,
    pub coring_one_cells: BTreeMap<String, CellEntry<CorOneCell>>,
    pub coring_two_cells: BTreeMap<String, CellEntry<CorTwoCell>>,
}

fn input(what: &str, name: &str, e: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{what} {name}: {e}"))
}

fn lookup<'a, T>(
    map: &'a BTreeMap<String, T>,
    what: &str,
    name: &str,
    owner: &str,
) -> Result<&'a T, CliError> {
    map.get(name)
        .ok_or_else(|| CliError::Input(format!("{owner} refers to unknown {what} {name:?}")))
}

fn parse_matrix(field: Field, doc: &MatrixDoc, ctx: &str) -> Result<Matrix, CliError> {
    let cols = doc.first().map_or(0, Vec::len);
    let rows = doc
        .iter()
        .map(|row| row.iter().map(|s| field.parse_scalar(s)).collect())
        .collect::<Result<Vec<Vec<_>>, _>>()
        .map_err(|e| CliError::Input(format!("{ctx}: {e}")))?;
    Matrix::from_rows(field, cols, rows).map_err(|e| CliError::Input(format!("{ctx}: {e}")))
}

fn matrix_doc(m: &Matrix) -> MatrixDoc {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|s| s.to_string()).collect())
        .collect()
}

fn check_dim(found: usize, declared: usize, ctx: &str) -> Result<(), CliError> {
    if found != declared {
        return Err(CliError::Input(format!(
            "{ctx}: declared dim {declared}, structure has dim {found}"
        )));
    }
    Ok(())
}

impl Workspace {
    pub fn empty(field: Field) -> Workspace {
        Workspace {
            field,
            algebras: BTreeMap::new(),
            coalgebras: BTreeMap::new(),
            entwinings: BTreeMap::new(),
            one_cells: BTreeMap::new(),
            two_cells: BTreeMap::new(),
            corings: BTreeMap::new(),
            coring_one_cells: BTreeMap::new(),
            coring_two_cells: BTreeMap::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Workspace, CliError> {
        let doc = WorkspaceDoc::parse(text)
            .map_err(|e| CliError::Input(format!("malformed workspace: {e}")))?;
        Workspace::from_doc(&doc)
    }

    pub fn to_canonical(&self) -> String {
        self.to_doc().to_canonical()
    }

    pub fn from_doc(doc: &WorkspaceDoc) -> Result<Workspace, CliError> {
        let field = match doc.field {
            FieldDoc::Rational => Field::Rational,
            FieldDoc::Prime { p } => {
                Field::prime(p).map_err(|e| CliError::Input(format!("field: {e}")))?
            }
        };
        let mut ws = Workspace::empty(field);
        let m = |d: &MatrixDoc, ctx: String| parse_matrix(field, d, &ctx);

        for (name, a) in &doc.algebras {
            let ctx = format!("algebra {name}");
            let alg = Algebra::new(m(&a.mult, ctx.clone())?, m(&a.unit, ctx.clone())?)
                .map_err(|e| input("algebra", name, e))?;
            check_dim(alg.dim(), a.dim, &ctx)?;
            ws.algebras.insert(name.clone(), alg);
        }
        for (name, c) in &doc.coalgebras {
            let ctx = format!("coalgebra {name}");
            let co = Coalgebra::new(m(&c.comult, ctx.clone())?, m(&c.counit, ctx.clone())?)
                .map_err(|e| input("coalgebra", name, e))?;
            check_dim(co.dim(), c.dim, &ctx)?;
            ws.coalgebras.insert(name.clone(), co);
        }
        for (name, e) in &doc.entwinings {
            let owner = format!("entwining {name}");
            let a = lookup(&ws.algebras, "algebra", &e.algebra, &owner)?;
            let c = lookup(&ws.coalgebras, "coalgebra", &e.coalgebra, &owner)?;
            let obj = EntwObj::new(a.clone(), c.clone(), m(&e.psi, owner.clone())?)
                .map_err(|err| input("entwining", name, err))?;
            ws.entwinings.insert(
                name.clone(),
                ObjEntry {
                    algebra: e.algebra.clone(),
                    coalgebra: e.coalgebra.clone(),
                    obj,
                },
            );
        }
        for (name, f) in &doc.one_cells {
            let owner = format!("1-cell {name}");
            let dom = lookup(&ws.entwinings, "entwining", &f.dom, &owner)?;
            let cod = lookup(&ws.entwinings, "entwining", &f.cod, &owner)?;
            let cell = EntwOneCell::new(
                dom.obj.clone(),
                cod.obj.clone(),
                f.dim_m,
                m(&f.alpha, owner.clone())?,
                m(&f.gamma, owner.clone())?,
            )
            .map_err(|e| input("1-cell", name, e))?;
            ws.one_cells.insert(
                name.clone(),
                CellEntry {
                    source: None,
                    dom: f.dom.clone(),
                    cod: f.cod.clone(),
                    cell,
                },
            );
        }
        for (name, t) in &doc.two_cells {
            let owner = format!("2-cell {name}");
            let dom = lookup(&ws.one_cells, "1-cell", &t.dom, &owner)?;
            let cod = lookup(&ws.one_cells, "1-cell", &t.cod, &owner)?;
            let cell = EntwTwoCell::new(
                dom.cell.clone(),
                cod.cell.clone(),
                m(&t.theta, owner.clone())?,
            )
            .map_err(|e| input("2-cell", name, e))?;
            ws.two_cells.insert(
                name.clone(),
                CellEntry {
                    source: None,
                    dom: t.dom.clone(),
                    cod: t.cod.clone(),
                    cell,
                },
            );
        }
        for (name, c) in &doc.corings {
            let owner = format!("coring {name}");
            if let Some(s) = &c.source {
                lookup(&ws.entwinings, "entwining", s, &owner)?;
            }
            let base = lookup(&ws.algebras, "algebra", &c.base, &owner)?;
            let carrier = Bimodule::new(
                base.clone(),
                base.clone(),
                m(&c.lact, owner.clone())?,
                m(&c.ract, owner.clone())?,
            )
            .map_err(|e| input("coring", name, e))?;
            check_dim(carrier.dim(), c.dim, &owner)?;
            let coring = Coring::new(
                carrier,
                m(&c.comult, owner.clone())?,
                m(&c.counit, owner.clone())?,
            )
            .map_err(|e| input("coring", name, e))?;
            ws.corings.insert(
                name.clone(),
                CoringEntry {
                    source: c.source.clone(),
                    base: c.base.clone(),
                    coring,
                },
            );
        }
        for (name, f) in &doc.coring_one_cells {
            let owner = format!("coring 1-cell {name}");
            if let Some(s) = &f.source {
                lookup(&ws.one_cells, "1-cell", s, &owner)?;
            }
            let dom = lookup(&ws.corings, "coring", &f.dom, &owner)?
                .coring
                .clone();
            let cod = lookup(&ws.corings, "coring", &f.cod, &owner)?
                .coring
                .clone();
            let carrier = Bimodule::new(
                cod.base().clone(),
                dom.base().clone(),
                m(&f.lact, owner.clone())?,
                m(&f.ract, owner.clone())?,
            )
            .map_err(|e| input("coring 1-cell", name, e))?;
            check_dim(carrier.dim(), f.dim, &owner)?;
            let cell = CorOneCell::new(dom, cod, carrier, m(&f.zeta, owner.clone())?)
                .map_err(|e| input("coring 1-cell", name, e))?;
            ws.coring_one_cells.insert(
                name.clone(),
                CellEntry {
                    source: f.source.clone(),
                    dom: f.dom.clone(),
                    cod: f.cod.clone(),
                    cell,
                },
            );
        }
        for (name, t) in &doc.coring_two_cells {
            let owner = format!("coring 2-cell {name}");
            if let Some(s) = &t.source {
                lookup(&ws.two_cells, "2-cell", s, &owner)?;
            }
            let dom = lookup(&ws.coring_one_cells, "coring 1-cell", &t.dom, &owner)?;
            let cod = lookup(&ws.coring_one_cells, "coring 1-cell", &t.cod, &owner)?;
            let cell = CorTwoCell::new(
                dom.cell.clone(),
                cod.cell.clone(),
                m(&t.map, owner.clone())?,
            )
            .map_err(|e| input("coring 2-cell", name, e))?;
            ws.coring_two_cells.insert(
                name.clone(),
                CellEntry {
                    source: t.source.clone(),
                    dom: t.dom.clone(),
                    cod: t.cod.clone(),
                    cell,
                },
            );
        }
        Ok(ws)
    }

    pub fn to_doc(&self) -> WorkspaceDoc {
        let field = match self.field {
            Field::Rational => FieldDoc::Rational,
            Field::Prime(p) => FieldDoc::Prime { p },
        };
        WorkspaceDoc {
            field,
            algebras: self
                .algebras
                .iter()
                .map(|(n, a)| {
                    let doc = AlgebraDoc {
                        dim: a.dim(),
                        mult: matrix_doc(a.mult()),
                        unit: matrix_doc(a.unit()),
                    };
                    (n.clone(), doc)
                })
                .collect(),
            coalgebras: self
                .coalgebras
                .iter()
                .map(|(n, c)| {
                    let doc = CoalgebraDoc {
                        dim: c.dim(),
                        comult: matrix_doc(c.comult()),
                        counit: matrix_doc(c.counit()),
                    };
                    (n.clone(), doc)
                })
                .collect(),
            entwinings: self
                .entwinings
                .iter()
                .map(|(n, e)| {
                    let doc = EntwiningDoc {
                        algebra: e.algebra.clone(),
                        coalgebra: e.coalgebra.clone(),
                        psi: matrix_doc(e.obj.psi()),
                    };
                    (n.clone(), doc)
                })
                .collect(),
            one_cells: self
                .one_cells
                .iter()
                .map(|(n, f)| {
                    let doc = OneCellDoc {
                        dom: f.dom.clone(),
                        cod: f.cod.clone(),
                        dim_m: f.cell.dim_m(),
                        alpha: matrix_doc(f.cell.alpha()),
                        gamma: matrix_doc(f.cell.gamma()),
                    };
                    (n.clone(), doc)
                })
                .collect(),
            two_cells: self
                .two_cells
                .iter()
                .map(|(n, t)| {
                    let doc = TwoCellDoc {
                        dom: t.dom.clone(),
                        cod: t.cod.clone(),
                        theta: matrix_doc(t.cell.theta()),
                    };
                    (n.clone(), doc)
                })
                .collect(),
            corings: self
                .corings
                .iter()
                .map(|(n, c)| {
                    let carrier = c.coring.carrier();
                    let doc = CoringDoc {
                        source: c.source.clone(),
                        base: c.base.clone(),
                        dim: carrier.dim(),
                        lact: matrix_doc(carrier.lact()),
                        ract: matrix_doc(carrier.ract()),
                        comult: matrix_doc(c.coring.comult()),
                        counit: matrix_doc(c.coring.counit()),
                    };
                    (n.clone(), doc)
                })
                .collect(),
            coring_one_cells: self
                .coring_one_cells
                .iter()
                .map(|(n, f)| {
                    let carrier = f.cell.carrier();
                    let doc = CorOneCellDoc {
                        source: f.source.clone(),
                        dom: f.dom.clone(),
                        cod: f.cod.clone(),
                        dim: carrier.dim(),
                        lact: matrix_doc(carrier.lact()),
                        ract: matrix_doc(carrier.ract()),
                        zeta: matrix_doc(f.cell.zeta()),
                    };
                    (n.clone(), doc)
                })
                .collect(),
            coring_two_cells: self
                .coring_two_cells
                .iter()
                .map(|(n, t)| {
                    let doc = CorTwoCellDoc {
                        source: t.source.clone(),
                        dom: t.dom.clone(),
                        cod: t.cod.clone(),
                        map: matrix_doc(t.cell.map()),
                    };
                    (n.clone(), doc)
                })
                .collect(),
        }
    }

    pub fn from_collection(c: &Collection) -> Workspace {
        let mut ws = Workspace::empty(c.field);
        ws.algebras = c.algebras.iter().cloned().collect();
        ws.coalgebras = c.coalgebras.iter().cloned().collect();
        for o in &c.objects {
            let entry = ObjEntry {
                algebra: o.algebra.clone(),
                coalgebra: o.coalgebra.clone(),
                obj: o.obj.clone(),
            };
            ws.entwinings.insert(o.name.clone(), entry);
        }
        for f in &c.one_cells {
            let entry = CellEntry {
                source: None,
                dom: f.dom.clone(),
                cod: f.cod.clone(),
                cell: f.cell.clone(),
            };
            ws.one_cells.insert(f.name.clone(), entry);
        }
        for t in &c.two_cells {
            let entry = CellEntry {
                source: None,
                dom: t.dom.clone(),
                cod: t.cod.clone(),
                cell: t.cell.clone(),
            };
            ws.two_cells.insert(t.name.clone(), entry);
        }
        ws
    }

    /// The entwining part, in name order.
    pub fn to_collection(&self) -> Collection {
        let mut c = Collection::new(self.field);
        c.algebras = self
            .algebras
            .iter()
            .map(|(n, a)| (n.clone(), a.clone()))
            .collect();
        c.coalgebras = self
            .coalgebras
            .iter()
            .map(|(n, a)| (n.clone(), a.clone()))
            .collect();
        c.objects = self
            .entwinings
            .iter()
            .map(|(n, e)| NamedObj {
                name: n.clone(),
                algebra: e.algebra.clone(),
                coalgebra: e.coalgebra.clone(),
                obj: e.obj.clone(),
            })
            .collect();
        c.one_cells = self
            .one_cells
            .iter()
            .map(|(n, f)| NamedOneCell {
                name: n.clone(),
                dom: f.dom.clone(),
                cod: f.cod.clone(),
                cell: f.cell.clone(),
            })
            .collect();
        c.two_cells = self
            .two_cells
            .iter()
            .map(|(n, t)| NamedTwoCell {
                name: n.clone(),
                dom: t.dom.clone(),
                cod: t.cod.clone(),
                cell: t.cell.clone(),
            })
            .collect();
        c
    }

    /// Whether any entry of any kind is called `name`.
    pub fn contains(&self, name: &str) -> bool {
        self.algebras.contains_key(name)
            || self.coalgebras.contains_key(name)
            || self.entwinings.contains_key(name)
            || self.one_cells.contains_key(name)
            || self.two_cells.contains_key(name)
            || self.corings.contains_key(name)
            || self.coring_one_cells.contains_key(name)
            || self.coring_two_cells.contains_key(name)
    }

    /// The entries called by any of `names`, of whatever kind, together
    /// with everything they refer to.
    pub fn restrict(&self, names: &[&str]) -> Result<Workspace, CliError> {
        let mut out = Workspace::empty(self.field);
        for name in names {
            if !self.contains(name) {
                return Err(CliError::Input(format!("no entry named {name:?}")));
            }
            self.copy_algebra(name, &mut out);
            self.copy_coalgebra(name, &mut out);
            self.copy_entwining(name, &mut out);
            self.copy_one_cell(name, &mut out);
            self.copy_two_cell(name, &mut out);
            self.copy_coring(name, &mut out);
            self.copy_cor_one_cell(name, &mut out);
            self.copy_cor_two_cell(name, &mut out);
        }
        Ok(out)
    }

    fn copy_algebra(&self, name: &str, out: &mut Workspace) {
        if let Some(a) = self.algebras.get(name) {
            out.algebras.insert(name.to_string(), a.clone());
        }
    }

    fn copy_coalgebra(&self, name: &str, out: &mut Workspace) {
        if let Some(c) = self.coalgebras.get(name) {
            out.coalgebras.insert(name.to_string(), c.clone());
        }
    }

    fn copy_entwining(&self, name: &str, out: &mut Workspace) {
        if let Some(e) = self.entwinings.get(name) {
            self.copy_algebra(&e.algebra, out);
            self.copy_coalgebra(&e.coalgebra, out);
            out.entwinings.insert(name.to_string(), e.clone());
        }
    }

    fn copy_one_cell(&self, name: &str, out: &mut Workspace) {
        if let Some(f) = self.one_cells.get(name) {
            self.copy_entwining(&f.dom, out);
            self.copy_entwining(&f.cod, out);
            out.one_cells.insert(name.to_string(), f.clone());
        }
    }

    fn copy_two_cell(&self, name: &str, out: &mut Workspace) {
        if let Some(t) = self.two_cells.get(name) {
            self.copy_one_cell(&t.dom, out);
            self.copy_one_cell(&t.cod, out);
            out.two_cells.insert(name.to_string(), t.clone());
        }
    }

    fn copy_coring(&self, name: &str, out: &mut Workspace) {
        if let Some(c) = self.corings.get(name) {
            self.copy_algebra(&c.base, out);
            if let Some(s) = &c.source {
                self.copy_entwining(s, out);
            }
            out.corings.insert(name.to_string(), c.clone());
        }
    }

    fn copy_cor_one_cell(&self, name: &str, out: &mut Workspace) {
        if let Some(f) = self.coring_one_cells.get(name) {
            self.copy_coring(&f.dom, out);
            self.copy_coring(&f.cod, out);
            if let Some(s) = &f.source {
                self.copy_one_cell(s, out);
            }
            out.coring_one_cells.insert(name.to_string(), f.clone());
        }
    }

    fn copy_cor_two_cell(&self, name: &str, out: &mut Workspace) {
        if let Some(t) = self.coring_two_cells.get(name) {
            self.copy_cor_one_cell(&t.dom, out);
            self.copy_cor_one_cell(&t.cod, out);
            if let Some(s) = &t.source {
                self.copy_two_cell(s, out);
            }
            out.coring_two_cells.insert(name.to_string(), t.clone());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use entwine_core::gallery::gallery;

    #[test]
    fn gallery_round_trips() {
        for field in [Field::Rational, Field::prime(7).unwrap()] {
            let ws = Workspace::from_collection(&gallery(field).unwrap());
            let text = ws.to_canonical();
            let back = Workspace::parse(&text).unwrap();
            assert_eq!(back, ws);
            assert_eq!(back.to_canonical(), text);
        }
    }

    #[test]
    fn restriction_keeps_dependencies() {
        let ws = Workspace::from_collection(&gallery(Field::Rational).unwrap());
        let r = ws.restrict(&["to_sign"]).unwrap();
        assert_eq!(r.two_cells.len(), 1);
        assert_eq!(
            r.one_cells.keys().collect::<Vec<_>>(),
            ["mod_C2", "mod_sign"]
        );
        assert_eq!(
            r.entwinings.keys().collect::<Vec<_>>(),
            ["bialg_C2", "trivial"]
        );
        assert!(ws.restrict(&["nope"]).is_err());
    }

    #[test]
    fn dangling_reference_is_an_input_error() {
        let ws = Workspace::from_collection(&gallery(Field::Rational).unwrap());
        let mut doc = ws.to_doc();
        doc.one_cells.get_mut("aug").unwrap().dom = "missing".into();
        assert!(matches!(Workspace::from_doc(&doc), Err(CliError::Input(_))));
    }
}
