use std::path::Path;

use painleve::algebra::Witness;
use painleve::catalog::{
    check_entry, classify_curve, find, load_catalog, normalize_label, CatalogEntry, ClassifyError, ExpectedTables,
    Fibration, FiberReport, TableRow,
};
use painleve::curves::{CurveError, CurveJson, FiberedCurve};
use painleve::kodaira::KodairaError;
use painleve::liu::{ExpectedRow, LiuError};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::report::{Report, Section};
use crate::{Config, FibrationArg, Selection, Status, TableSet};

type Outcome = Result<(Report, Status), (String, Status)>;

fn catalog() -> Result<Vec<CatalogEntry>, (String, Status)> {
    load_catalog().map_err(|e| (e.to_string(), Status::Usage))
}

fn expected_tables() -> Result<ExpectedTables, (String, Status)> {
    painleve::catalog::load_expected_tables().map_err(|e| (e.to_string(), Status::Usage))
}

/// Resolves every name before any computation; `explicit` is false for `--all`.
fn select<'a>(catalog: &'a [CatalogEntry], sel: &Selection) -> Result<(Vec<&'a CatalogEntry>, bool), (String, Status)> {
    if sel.all {
        return Ok((catalog.iter().collect(), false));
    }
    if sel.systems.is_empty() {
        return Err(("give --system NAME or --all".into(), Status::Usage));
    }
    let mut out = Vec::new();
    for name in &sel.systems {
        match find(catalog, name) {
            Some(e) => out.push(e),
            None => return Err((format!("unknown system: {}", name), Status::Usage)),
        }
    }
    Ok((out, true))
}

fn fibrations(arg: FibrationArg) -> Vec<Fibration> {
    match arg {
        FibrationArg::H => vec![Fibration::H],
        FibrationArg::G => vec![Fibration::G],
        FibrationArg::Both => vec![Fibration::H, Fibration::G],
    }
}

fn flag(b: Option<bool>) -> String {
    match b {
        Some(true) => "yes".into(),
        Some(false) => "no".into(),
        None => "-".into(),
    }
}

fn is_unsupported(e: &ClassifyError) -> bool {
    let unsupported = |c: &CurveError| matches!(c, CurveError::UnsupportedShape(_));
    match e {
        ClassifyError::Curve(c) | ClassifyError::Kodaira(KodairaError::Curve(c)) | ClassifyError::Liu(LiuError::Curve(c)) => {
            unsupported(c)
        }
        _ => false,
    }
}

pub fn verify(cfg: &Config, sel: &Selection) -> Outcome {
    let catalog = catalog()?;
    let (entries, explicit) = select(&catalog, sel)?;
    let results: Vec<_> = entries.par_iter().map(|e| check_entry(e, &mut Witness::new(cfg.seed))).collect();
    let mut status = Status::Pass;
    let mut rows = Vec::new();
    let mut records = Vec::new();
    for (e, r) in entries.iter().zip(results) {
        match r {
            Ok(c) => {
                let verdict = match c.pass {
                    Some(true) => "pass",
                    Some(false) => {
                        status = status.max(Status::Mismatch);
                        "fail"
                    }
                    None => {
                        if explicit {
                            status = status.max(Status::Unsupported);
                        }
                        "skipped"
                    }
                };
                let integ = c.integrability.as_ref();
                rows.push(vec![
                    e.name.clone(),
                    flag(integ.map(|r| r.bracket_zero)),
                    integ.map_or("-".into(), |r| r.jacobian_rank.to_string()),
                    flag(c.lax_residual_zero),
                    flag(c.trace_powers_conserved),
                    flag(c.spectral_curve_matches),
                    verdict.into(),
                ]);
                let mut rec = serde_json::to_value(&c).expect("report serializes");
                rec["status"] = json!(verdict);
                records.push(rec);
            }
            Err(err) => {
                status = status.max(Status::Mismatch);
                rows.push(vec![e.name.clone(), "-".into(), "-".into(), "-".into(), "-".into(), "-".into(), "error".into()]);
                records.push(json!({"system": e.name, "status": "error", "error": err.to_string()}));
            }
        }
    }
    let section = Section {
        title: "integrability".into(),
        columns: vec!["system", "brackets vanish", "rank", "lax residual", "traces conserved", "curve", "status"],
        rows,
        records,
    };
    Ok((
        Report {
            command: "verify",
            seed: cfg.seed,
            sections: vec![section],
        },
        status,
    ))
}

/// Computed label: Kodaira type with its Dynkin label, or the stable type.
fn computed_cell(r: &FiberReport) -> String {
    match r {
        FiberReport::Genus1 { report, .. } => match &report.dynkin {
            Some(d) => format!("{} {}", report.kodaira, d),
            None => report.kodaira.to_string(),
        },
        FiberReport::Genus2(g) => g.stable.to_string(),
    }
}

fn expected_cell(genus: &str, e: &ExpectedRow) -> String {
    if genus == "1" {
        let k: String = normalize_label(&e.nu_type).chars().filter(|c| !matches!(c, '_' | '^')).collect();
        format!("{} {}", k, normalize_label(&e.dynkin))
    } else {
        normalize_label(&e.stable)
    }
}

struct Task<'a> {
    system: Option<&'a CatalogEntry>,
    fibration: String,
    curve: Option<FiberedCurve>,
    expected: Option<ExpectedRow>,
}

fn run_task(t: &Task, seed: u64) -> Option<Result<FiberReport, ClassifyError>> {
    let c = t.curve.as_ref()?;
    Some(classify_curve(c, t.expected.as_ref(), &mut Witness::new(seed)))
}

/// Renders classification results; returns the section and the worst status.
fn classification_section(title: &str, tasks: &[Task], results: Vec<Option<Result<FiberReport, ClassifyError>>>) -> (Section, Status) {
    let mut status = Status::Pass;
    let mut rows = Vec::new();
    let mut records = Vec::new();
    for (t, r) in tasks.iter().zip(results) {
        let system = t.system.map_or("-".to_string(), |e| e.name.clone());
        let genus = match &r {
            Some(Ok(FiberReport::Genus1 { .. })) => "1",
            Some(Ok(FiberReport::Genus2(_))) => "2",
            _ => match t.system {
                Some(e) if e.dimension == 2 => "1",
                Some(_) => "2",
                None => "-",
            },
        };
        let expected = t.expected.as_ref().map_or("-".to_string(), |e| expected_cell(genus, e));
        let nu = t.expected.as_ref().filter(|_| genus == "2").map_or("-".to_string(), |e| normalize_label(&e.nu_type));
        let (computed, agreement, verdict, rec) = match r {
            Some(Ok(rep)) => {
                if rep.agreement() == Some(false) {
                    status = status.max(Status::Mismatch);
                }
                let mut rec = serde_json::to_value(&rep).expect("report serializes");
                rec["system"] = json!(system);
                rec["fibration"] = json!(t.fibration);
                rec["status"] = json!("computed");
                (computed_cell(&rep), rep.agreement(), "computed", rec)
            }
            Some(Err(err)) => {
                status = status.max(if is_unsupported(&err) { Status::Unsupported } else { Status::Mismatch });
                let rec = json!({"system": system, "fibration": t.fibration, "status": "unverified",
                    "error": err.to_string(), "expected": t.expected});
                ("-".into(), None, "unverified", rec)
            }
            None => {
                let rec = json!({"system": system, "fibration": t.fibration, "status": "expected", "expected": t.expected});
                ("-".into(), None, "expected", rec)
            }
        };
        rows.push(vec![
            system,
            t.fibration.clone(),
            genus.into(),
            computed,
            expected,
            nu,
            flag(agreement),
            verdict.into(),
        ]);
        records.push(rec);
    }
    let section = Section {
        title: title.into(),
        columns: vec!["system", "fibration", "genus", "computed", "expected", "N-U type", "agrees", "status"],
        rows,
        records,
    };
    (section, status)
}

pub fn classify(cfg: &Config, sel: &Selection, fib: FibrationArg, curve: Option<&Path>) -> Outcome {
    let catalog = catalog()?;
    let mut tasks = Vec::new();
    let mut status = Status::Pass;
    if let Some(path) = curve {
        let text = std::fs::read_to_string(path).map_err(|e| (format!("{}: {}", path.display(), e), Status::Usage))?;
        let json: CurveJson =
            serde_json::from_str(&text).map_err(|e| (format!("{}: {}", path.display(), e), Status::Usage))?;
        let c = json.to_curve().map_err(|e| {
            let s = if matches!(e, CurveError::UnsupportedShape(_)) { Status::Unsupported } else { Status::Usage };
            (format!("{}: {}", path.display(), e), s)
        })?;
        let system = if sel.systems.is_empty() && !sel.all { None } else { Some(select(&catalog, sel)?.0) };
        if sel.all || system.as_ref().is_some_and(|s| s.len() > 1) {
            return Err(("--curve takes at most one --system".into(), Status::Usage));
        }
        let system = system.and_then(|s| s.into_iter().next());
        let fname = c.fibration().name().to_string();
        let expected = system.and_then(|e| {
            e.expected
                .iter()
                .find(|(f, _)| f.symbol().name() == fname)
                .map(|(_, r)| r.clone())
        });
        tasks.push(Task {
            system,
            fibration: fname,
            curve: Some(c),
            expected,
        });
    } else {
        let (entries, explicit) = select(&catalog, sel)?;
        for e in entries {
            let mut any = false;
            for f in fibrations(fib) {
                if !e.fibrations().contains(&f) {
                    continue;
                }
                let curve = e.curves.get(&f).cloned();
                any |= curve.is_some();
                tasks.push(Task {
                    system: Some(e),
                    fibration: f.to_string(),
                    curve,
                    expected: e.expected.get(&f).cloned(),
                });
            }
            if explicit && !any {
                status = status.max(Status::Unsupported);
            }
        }
    }
    let results: Vec<_> = tasks.par_iter().map(|t| run_task(t, cfg.seed)).collect();
    let (section, s) = classification_section("fibers at infinity", &tasks, results);
    Ok((
        Report {
            command: "classify",
            seed: cfg.seed,
            sections: vec![section],
        },
        status.max(s),
    ))
}

pub fn table(cfg: &Config, set: TableSet, fib: FibrationArg) -> Outcome {
    let catalog = catalog()?;
    let tables = expected_tables()?;
    let (sections, status) = match set {
        TableSet::Genus1 => genus1_table(cfg, &catalog, &tables)?,
        TableSet::Genus2 => {
            let mut sections = Vec::new();
            let mut status = Status::Pass;
            for f in fibrations(fib) {
                let rows = if f == Fibration::H { &tables.table5 } else { &tables.table6 };
                let (s, st) = genus2_table(cfg, &catalog, rows, f)?;
                sections.push(s);
                status = status.max(st);
            }
            (sections, status)
        }
    };
    Ok((
        Report {
            command: "table",
            seed: cfg.seed,
            sections,
        },
        status,
    ))
}

fn entry<'a>(catalog: &'a [CatalogEntry], name: &str) -> Result<&'a CatalogEntry, (String, Status)> {
    find(catalog, name).ok_or_else(|| (format!("table row for unknown system {}", name), Status::Usage))
}

fn genus1_table(
    cfg: &Config,
    catalog: &[CatalogEntry],
    tables: &ExpectedTables,
) -> Result<(Vec<Section>, Status), (String, Status)> {
    let mut tasks = Vec::new();
    for r in &tables.genus1 {
        let e = entry(catalog, &r.system)?;
        tasks.push(Task {
            system: Some(e),
            fibration: r.fibration.to_string(),
            curve: e.curves.get(&r.fibration).cloned(),
            expected: e.expected.get(&r.fibration).cloned(),
        });
    }
    let results: Vec<_> = tasks.par_iter().map(|t| run_task(t, cfg.seed)).collect();
    let mut status = Status::Pass;
    let mut rows = Vec::new();
    let mut records = Vec::new();
    for ((t, r), row) in tasks.iter().zip(results).zip(&tables.genus1) {
        let (kodaira, dynkin, agrees, verdict) = match &r {
            Some(Ok(FiberReport::Genus1 { report, agreement, .. })) => (
                report.kodaira.to_string(),
                report.dynkin.clone().unwrap_or_else(|| "-".into()),
                *agreement,
                "computed",
            ),
            Some(_) => ("-".into(), "-".into(), None, "unverified"),
            None => ("-".into(), "-".into(), None, "expected"),
        };
        if agrees != Some(true) {
            status = status.max(Status::Mismatch);
        }
        rows.push(vec![
            row.system.clone(),
            normalize_label(&row.kodaira),
            normalize_label(&row.dynkin),
            kodaira.clone(),
            dynkin.clone(),
            flag(agrees),
            verdict.into(),
        ]);
        let mut rec = json!({
            "system": row.system, "fibration": t.fibration,
            "expected": {"kodaira": row.kodaira, "dynkin": row.dynkin},
            "kodaira": kodaira, "dynkin": dynkin, "agreement": agrees, "status": verdict,
        });
        if let Some(Ok(rep)) = &r {
            rec["report"] = serde_json::to_value(rep).expect("report serializes");
        }
        if let Some(Err(err)) = &r {
            rec["error"] = json!(err.to_string());
        }
        records.push(rec);
    }
    let section = Section {
        title: "genus 1, fibration h".into(),
        columns: vec!["system", "Kodaira", "Dynkin", "computed Kodaira", "computed Dynkin", "agrees", "status"],
        rows,
        records,
    };
    Ok((vec![section], status))
}

fn genus2_table(
    cfg: &Config,
    catalog: &[CatalogEntry],
    table: &[TableRow],
    f: Fibration,
) -> Result<(Section, Status), (String, Status)> {
    let mut tasks = Vec::new();
    for r in table {
        let e = entry(catalog, &r.system)?;
        tasks.push(Task {
            system: Some(e),
            fibration: f.to_string(),
            curve: e.curves.get(&f).cloned(),
            expected: Some(r.expected()),
        });
    }
    let results: Vec<_> = tasks.par_iter().map(|t| run_task(t, cfg.seed)).collect();
    let mut status = Status::Pass;
    let mut rows = Vec::new();
    let mut records = Vec::new();
    for (r, res) in table.iter().zip(results) {
        let (computed, agrees, verdict) = match &res {
            Some(Ok(rep)) => (rep.computed_label(), rep.agreement(), "computed"),
            Some(Err(_)) => ("-".into(), None, "unverified"),
            None => ("-".into(), None, "expected"),
        };
        match (&res, agrees) {
            (Some(Err(e)), _) if is_unsupported(e) => status = status.max(Status::Unsupported),
            (Some(Err(_)), _) | (_, Some(false)) => status = status.max(Status::Mismatch),
            _ => {}
        }
        let cells: Vec<String> = [
            &r.hamiltonian,
            &r.spectral_type,
            &r.nu_type,
            &r.dynkin,
            &r.stable,
            &r.phi,
            &r.ogg,
            &r.nu,
            &r.page,
        ]
        .iter()
        .map(|c| normalize_label(c))
        .collect();
        let mut row = vec![r.system.clone()];
        row.extend(cells);
        row.extend([computed.clone(), flag(agrees), verdict.to_string()]);
        rows.push(row);
        let mut rec: Value = serde_json::to_value(r).expect("row serializes");
        rec["computed_stable"] = json!(if verdict == "computed" { Some(computed) } else { None });
        rec["agreement"] = json!(agrees);
        rec["status"] = json!(verdict);
        if let Some(Ok(rep)) = &res {
            rec["report"] = serde_json::to_value(rep).expect("report serializes");
        }
        if let Some(Err(err)) = &res {
            rec["error"] = json!(err.to_string());
        }
        records.push(rec);
    }
    let section = Section {
        title: format!("genus 2, fibration {}", f),
        columns: vec![
            "system",
            "Hamiltonian",
            "spectral type",
            "N-U type",
            "Dynkin",
            "stable",
            "Phi",
            "Ogg",
            "NU",
            "page",
            "computed stable",
            "agrees",
            "status",
        ],
        rows,
        records,
    };
    Ok((section, status))
}
