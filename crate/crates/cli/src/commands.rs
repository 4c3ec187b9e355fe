//! The verbs. Each returns its report and, for transformers, the document
//! to write; nothing is printed or written here.

use entwine_core::algstruct::{check_algebra, check_coalgebra, CheckReport};
use entwine_core::comc::{comc_obj, comc_one_cell, comc_two_cell};
use entwine_core::corcat::{check_cor_one_cell, check_cor_two_cell, check_coring};
use entwine_core::entwcat::{
    check_obj, check_one_cell, check_two_cell, compose_one_cells, hcomp, vcomp, EntwOneCell,
};
use entwine_core::gallery::gallery;
use entwine_core::laws::{run_laws, LawLine, LawReport, Level};
use entwine_core::{Error, Field};

use crate::workspace::{CellEntry, CoringEntry, Workspace};
use crate::CliError;

/// What a verb produced: report lines, a document to write, and whether
/// every check passed.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: LawReport,
    pub document: Option<String>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.report.passed() {
            0
        } else {
            1
        }
    }
}

fn line(
    report: &mut LawReport,
    kind: &'static str,
    name: &str,
    axiom: &str,
    ok: bool,
    detail: &str,
) {
    report.lines.push(LawLine {
        kind,
        name: name.to_string(),
        axiom: axiom.to_string(),
        failure: (!ok).then(|| detail.to_string()),
    });
}

fn semantic(e: Error) -> CliError {
    CliError::Semantic(e.to_string())
}

/// Names of the failed axioms of `r`, for error messages.
fn failed_axioms(r: &CheckReport) -> String {
    let names: Vec<&str> = r
        .results()
        .filter(|(_, f)| f.is_some())
        .map(|(a, _)| a)
        .collect();
    names.join(", ")
}

pub fn cmd_gallery(field: Field, selector: Option<&str>) -> Result<Outcome, CliError> {
    let ws = Workspace::from_collection(&gallery(field).map_err(semantic)?);
    let ws = match selector {
        None | Some("all") => ws,
        Some(s) => ws.restrict(&split_names(s))?,
    };
    Ok(Outcome {
        report: LawReport::default(),
        document: Some(ws.to_canonical()),
    })
}

fn split_names(selector: &str) -> Vec<&str> {
    selector
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect()
}

/// Every checker applicable to the selected entries (`all`, or a
/// comma-separated list of names).
pub fn cmd_check(ws: &Workspace, selector: &str) -> Result<Outcome, CliError> {
    let ws = if selector == "all" {
        ws.clone()
    } else {
        let names = split_names(selector);
        for n in &names {
            if !ws.contains(n) {
                return Err(CliError::Input(format!("no entry named {n:?}")));
            }
        }
        select_exactly(ws, &names)
    };
    let mut report = LawReport::default();
    for (n, a) in &ws.algebras {
        report.absorb("ALGEBRA", n, &check_algebra(a));
    }
    for (n, c) in &ws.coalgebras {
        report.absorb("COALGEBRA", n, &check_coalgebra(c));
    }
    for (n, e) in &ws.entwinings {
        report.absorb("OBJ", n, &check_obj(&e.obj));
    }
    for (n, f) in &ws.one_cells {
        report.absorb("ONE", n, &check_one_cell(&f.cell));
    }
    for (n, t) in &ws.two_cells {
        report.absorb("TWO", n, &check_two_cell(&t.cell));
    }
    for (n, c) in &ws.corings {
        report.absorb("CORING", n, &check_coring(&c.coring));
        if let Some(s) = &c.source {
            let obj = &ws.entwinings[s].obj;
            let matches = comc_obj(obj).map(|img| img == c.coring);
            line(
                &mut report,
                "CORING",
                n,
                "provenance",
                matches == Ok(true),
                &format!("differs from comc({s})"),
            );
        }
    }
    for (n, f) in &ws.coring_one_cells {
        report.absorb("CORONE", n, &check_cor_one_cell(&f.cell));
        if let Some(s) = &f.source {
            let matches = comc_one_cell(&ws.one_cells[s].cell).map(|img| img == f.cell);
            line(
                &mut report,
                "CORONE",
                n,
                "provenance",
                matches == Ok(true),
                &format!("differs from comc({s})"),
            );
        }
    }
    for (n, t) in &ws.coring_two_cells {
        report.absorb("CORTWO", n, &check_cor_two_cell(&t.cell));
        if let Some(s) = &t.source {
            let matches = comc_two_cell(&ws.two_cells[s].cell).map(|img| img == t.cell);
            line(
                &mut report,
                "CORTWO",
                n,
                "provenance",
                matches == Ok(true),
                &format!("differs from comc({s})"),
            );
        }
    }
    Ok(Outcome {
        report,
        document: None,
    })
}

/// Only the named entries, without their dependencies: a check of a 1-cell
/// reports on the 1-cell alone.
fn select_exactly(ws: &Workspace, names: &[&str]) -> Workspace {
    let mut out = Workspace::empty(ws.field);
    for n in names {
        let n = n.to_string();
        if let Some(x) = ws.algebras.get(&n) {
            out.algebras.insert(n.clone(), x.clone());
        }
        if let Some(x) = ws.coalgebras.get(&n) {
            out.coalgebras.insert(n.clone(), x.clone());
        }
        if let Some(x) = ws.entwinings.get(&n) {
            out.entwinings.insert(n.clone(), x.clone());
        }
        if let Some(x) = ws.one_cells.get(&n) {
            out.one_cells.insert(n.clone(), x.clone());
        }
        if let Some(x) = ws.two_cells.get(&n) {
            out.two_cells.insert(n.clone(), x.clone());
        }
        if let Some(x) = ws.corings.get(&n) {
            out.corings.insert(n.clone(), x.clone());
        }
        if let Some(x) = ws.coring_one_cells.get(&n) {
            out.coring_one_cells.insert(n.clone(), x.clone());
        }
        if let Some(x) = ws.coring_two_cells.get(&n) {
            out.coring_two_cells.insert(n.clone(), x.clone());
        }
    }
    // provenance checks need the sources
    for c in out.corings.clone().values() {
        if let Some(s) = &c.source {
            out.entwinings
                .entry(s.clone())
                .or_insert_with(|| ws.entwinings[s].clone());
        }
    }
    for f in out.coring_one_cells.clone().values() {
        if let Some(s) = &f.source {
            out.one_cells
                .entry(s.clone())
                .or_insert_with(|| ws.one_cells[s].clone());
        }
    }
    for t in out.coring_two_cells.clone().values() {
        if let Some(s) = &t.source {
            out.two_cells
                .entry(s.clone())
                .or_insert_with(|| ws.two_cells[s].clone());
        }
    }
    out
}

/// Registers `cell` in `ws`, reusing the name of a structurally equal
/// 1-cell when there is one.
fn adopt_one_cell(
    ws: &mut Workspace,
    cell: EntwOneCell,
    fallback: String,
) -> Result<String, CliError> {
    if let Some((n, _)) = ws.one_cells.iter().find(|(_, f)| f.cell == cell) {
        return Ok(n.clone());
    }
    let dom = object_name(ws, cell.dom())?;
    let cod = object_name(ws, cell.cod())?;
    if ws.one_cells.contains_key(&fallback) {
        return Err(name_taken(&fallback));
    }
    ws.one_cells.insert(
        fallback.clone(),
        CellEntry {
            source: None,
            dom,
            cod,
            cell,
        },
    );
    Ok(fallback)
}

fn object_name(ws: &Workspace, obj: &entwine_core::EntwObj) -> Result<String, CliError> {
    ws.entwinings
        .iter()
        .find(|(_, e)| &e.obj == obj)
        .map(|(n, _)| n.clone())
        .ok_or_else(|| CliError::Input("composite has an endpoint outside the workspace".into()))
}

fn name_taken(name: &str) -> CliError {
    CliError::Input(format!(
        "name {name:?} is already taken by a different cell"
    ))
}

fn claim_name(
    taken: bool,
    existing_equal: Option<String>,
    wanted: Option<&str>,
    fallback: String,
) -> Result<String, CliError> {
    match (wanted, existing_equal) {
        (Some(w), Some(e)) if w == e => Ok(e),
        (Some(w), _) if taken => Err(name_taken(w)),
        (Some(w), _) => Ok(w.to_string()),
        (None, Some(e)) => Ok(e),
        (None, None) => Ok(fallback),
    }
}

/// `first ∘ second` for 1-cells; vertical (or horizontal) composition for
/// 2-cells. The output holds the composite and what it refers to; a
/// composite equal to an existing entry keeps that entry's name.
pub fn cmd_compose(
    ws: &Workspace,
    first: &str,
    second: &str,
    horizontal: bool,
    name: Option<&str>,
) -> Result<Outcome, CliError> {
    let mut out = ws.clone();
    let fallback = format!("{first}.{second}");
    let mut report = LawReport::default();
    let result_name;
    if let (Some(p), Some(m)) = (ws.one_cells.get(first), ws.one_cells.get(second)) {
        if horizontal {
            return Err(CliError::Input("--horizontal applies to 2-cells".into()));
        }
        let pm = compose_one_cells(&p.cell, &m.cell).map_err(semantic)?;
        let r = check_one_cell(&pm);
        if !r.passed() {
            return Err(CliError::Semantic(format!(
                "composite fails {}",
                failed_axioms(&r)
            )));
        }
        let equal = ws
            .one_cells
            .iter()
            .find(|(_, f)| f.cell == pm)
            .map(|(n, _)| n.clone());
        let taken = name.is_some_and(|n| ws.one_cells.contains_key(n));
        result_name = claim_name(taken, equal, name, fallback)?;
        match out.one_cells.get(&result_name) {
            Some(existing) if existing.cell != pm => return Err(name_taken(&result_name)),
            Some(_) => {}
            None => {
                let entry = CellEntry {
                    source: None,
                    dom: m.dom.clone(),
                    cod: p.cod.clone(),
                    cell: pm,
                };
                out.one_cells.insert(result_name.clone(), entry);
            }
        }
        report.absorb("ONE", &result_name, &r);
    } else if let (Some(t2), Some(t1)) = (ws.two_cells.get(first), ws.two_cells.get(second)) {
        let t = if horizontal {
            hcomp(&t2.cell, &t1.cell)
        } else {
            vcomp(&t2.cell, &t1.cell)
        }
        .map_err(semantic)?;
        let r = check_two_cell(&t);
        if !r.passed() {
            return Err(CliError::Semantic(format!(
                "composite fails {}",
                failed_axioms(&r)
            )));
        }
        let (dom, cod) = if horizontal {
            (
                adopt_one_cell(&mut out, t.dom().clone(), format!("{}.{}", t2.dom, t1.dom))?,
                adopt_one_cell(&mut out, t.cod().clone(), format!("{}.{}", t2.cod, t1.cod))?,
            )
        } else {
            (t1.dom.clone(), t2.cod.clone())
        };
        let equal = ws
            .two_cells
            .iter()
            .find(|(_, c)| c.cell == t)
            .map(|(n, _)| n.clone());
        let taken = name.is_some_and(|n| ws.two_cells.contains_key(n));
        result_name = claim_name(taken, equal, name, fallback)?;
        match out.two_cells.get(&result_name) {
            Some(existing) if existing.cell != t => return Err(name_taken(&result_name)),
            Some(_) => {}
            None => {
                out.two_cells.insert(
                    result_name.clone(),
                    CellEntry {
                        source: None,
                        dom,
                        cod,
                        cell: t,
                    },
                );
            }
        }
        report.absorb("TWO", &result_name, &r);
    } else {
        return Err(CliError::Input(format!(
            "{first:?} and {second:?} must both name 1-cells or both name 2-cells"
        )));
    }
    let document = out.restrict(&[&result_name])?.to_canonical();
    Ok(Outcome {
        report,
        document: Some(document),
    })
}

fn comc_name(name: &str) -> String {
    format!("comc({name})")
}

fn add_comc_obj(ws: &Workspace, out: &mut Workspace, obj: &str) -> Result<String, CliError> {
    let entry = &ws.entwinings[obj];
    let coring = comc_obj(&entry.obj).map_err(semantic)?;
    let r = check_coring(&coring);
    if !r.passed() {
        return Err(CliError::Semantic(format!(
            "comc({obj}) fails {}",
            failed_axioms(&r)
        )));
    }
    let name = comc_name(obj);
    out.corings.insert(
        name.clone(),
        CoringEntry {
            source: Some(obj.to_string()),
            base: entry.algebra.clone(),
            coring,
        },
    );
    Ok(name)
}

fn add_comc_one_cell(ws: &Workspace, out: &mut Workspace, cell: &str) -> Result<String, CliError> {
    let entry = &ws.one_cells[cell];
    // on failure, say which axiom of the input is to blame
    let blame = || {
        let r = check_one_cell(&entry.cell);
        if r.passed() {
            String::new()
        } else {
            format!("; 1-cell {cell} fails {}", failed_axioms(&r))
        }
    };
    let image = comc_one_cell(&entry.cell)
        .map_err(|e| CliError::Semantic(format!("comc({cell}): {e}{}", blame())))?;
    let r = check_cor_one_cell(&image);
    if !r.passed() {
        return Err(CliError::Semantic(format!(
            "comc({cell}) fails {}{}",
            failed_axioms(&r),
            blame()
        )));
    }
    let dom = add_comc_obj(ws, out, &entry.dom)?;
    let cod = add_comc_obj(ws, out, &entry.cod)?;
    let name = comc_name(cell);
    out.coring_one_cells.insert(
        name.clone(),
        CellEntry {
            source: Some(cell.to_string()),
            dom,
            cod,
            cell: image,
        },
    );
    Ok(name)
}

/// The image under comc of the entwining, 1-cell or 2-cell called `name`,
/// with the images of its endpoints.
pub fn cmd_comc(ws: &Workspace, name: &str) -> Result<Outcome, CliError> {
    let kinds = [
        ws.entwinings.contains_key(name),
        ws.one_cells.contains_key(name),
        ws.two_cells.contains_key(name),
    ];
    let mut out = ws.clone();
    let image = match kinds {
        [true, false, false] => add_comc_obj(ws, &mut out, name)?,
        [false, true, false] => add_comc_one_cell(ws, &mut out, name)?,
        [false, false, true] => {
            let entry = &ws.two_cells[name];
            let image = comc_two_cell(&entry.cell).map_err(semantic)?;
            let r = check_cor_two_cell(&image);
            if !r.passed() {
                return Err(CliError::Semantic(format!(
                    "comc({name}) fails {}",
                    failed_axioms(&r)
                )));
            }
            let dom = add_comc_one_cell(ws, &mut out, &entry.dom)?;
            let cod = add_comc_one_cell(ws, &mut out, &entry.cod)?;
            let n = comc_name(name);
            out.coring_two_cells.insert(
                n.clone(),
                CellEntry {
                    source: Some(name.to_string()),
                    dom,
                    cod,
                    cell: image,
                },
            );
            n
        }
        [false, false, false] => {
            return Err(CliError::Input(format!(
                "no entwining, 1-cell or 2-cell named {name:?}"
            )))
        }
        _ => {
            return Err(CliError::Input(format!(
                "{name:?} names cells of several kinds"
            )))
        }
    };
    let out = out.restrict(&[&image])?;
    let report = cmd_check(&out, &image)?.report;
    Ok(Outcome {
        report,
        document: Some(out.to_canonical()),
    })
}

pub fn cmd_laws(ws: &Workspace, level: Level) -> Result<Outcome, CliError> {
    let report = run_laws(&ws.to_collection(), level);
    Ok(Outcome {
        report,
        document: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws() -> Workspace {
        Workspace::from_collection(&gallery(Field::Rational).unwrap())
    }

    #[test]
    fn check_gallery_passes() {
        let o = cmd_check(&ws(), "all").unwrap();
        assert_eq!(o.exit_code(), 0);
        assert!(o
            .report
            .lines
            .iter()
            .any(|l| l.kind == "OBJ" && l.axiom == "E3 unit triangle"));
    }

    #[test]
    fn compose_names() {
        let w = ws();
        let o = cmd_compose(&w, "twist", "aug", false, None).unwrap();
        let back = Workspace::parse(o.document.as_deref().unwrap()).unwrap();
        assert!(back.one_cells.contains_key("twist.aug"));
        // twist squares to the identity
        let o = cmd_compose(&w, "twist", "twist", false, None).unwrap();
        let back = Workspace::parse(o.document.as_deref().unwrap()).unwrap();
        assert_eq!(
            back.one_cells.keys().collect::<Vec<_>>(),
            ["id_flip_kC2_gl2"]
        );
        let o = cmd_compose(&w, "twist", "id_flip_kC2_gl2", false, None).unwrap();
        let back = Workspace::parse(o.document.as_deref().unwrap()).unwrap();
        assert_eq!(back.one_cells.keys().collect::<Vec<_>>(), ["twist"]);
        assert!(matches!(
            cmd_compose(&w, "aug", "twist", false, None),
            Err(CliError::Semantic(_))
        ));
        assert!(matches!(
            cmd_compose(&w, "twist", "twist", false, Some("aug")),
            Err(CliError::Input(_))
        ));
    }

    #[test]
    fn horizontal_composite_names_its_endpoints() {
        let o = cmd_compose(&ws(), "two_mod_C2", "diag_comod", true, None).unwrap();
        let back = Workspace::parse(o.document.as_deref().unwrap()).unwrap();
        let t = &back.two_cells["two_mod_C2.diag_comod"];
        assert_eq!(t.dom, "mod_C2.comod_C2");
        assert_eq!(cmd_check(&back, "all").unwrap().exit_code(), 0);
    }

    #[test]
    fn comc_of_two_cell_carries_its_endpoints() {
        let o = cmd_comc(&ws(), "to_sign").unwrap();
        assert_eq!(o.exit_code(), 0);
        let back = Workspace::parse(o.document.as_deref().unwrap()).unwrap();
        assert_eq!(back.coring_one_cells.len(), 2);
        assert_eq!(
            back.corings.keys().collect::<Vec<_>>(),
            ["comc(bialg_C2)", "comc(trivial)"]
        );
        assert_eq!(cmd_check(&back, "all").unwrap().exit_code(), 0);
    }

    #[test]
    fn comc_of_broken_cell_names_the_axiom() {
        let mut w = ws();
        let f = w.one_cells.get_mut("mod_C2").unwrap();
        let c = &f.cell;
        let alpha = c.alpha().perturbed(0, 0, &Field::Rational.from_i64(1));
        f.cell = EntwOneCell::new(
            c.dom().clone(),
            c.cod().clone(),
            c.dim_m(),
            alpha,
            c.gamma().clone(),
        )
        .unwrap();
        match cmd_comc(&w, "mod_C2") {
            Err(CliError::Semantic(msg)) => assert!(msg.contains("1-cell mod_C2 fails"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }
}
