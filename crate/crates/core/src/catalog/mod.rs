//! Registry of the Painleve-type systems: Hamiltonians, Lax data, curves,
//! expected fiber tables and spectral types.

mod check;
mod classify;
mod embedded;
pub mod spectral;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::algebra::{parse_expr, parse_expr_with, Macros, MultiPoly, RationalFunction, Symbol, Q};
use crate::curves::{CurveJson, FiberedCurve, SpectralCurve};
use crate::hamiltonian::{HamiltonianError, LaxSystem, Matrix, PhaseSpace};
use crate::liu::ExpectedRow;

pub use check::{check_entry, EntryCheck};
pub use classify::{classify_curve, normalize_label, ClassifyError, FiberReport};
pub use spectral::{
    format_pattern, parse_pattern_label, parse_spectral_type, partition_string, same_pattern, singularity_pattern, LocalType, SpectralError,
    SpectralType,
};

/// SHA-256 of the bundled `expected_tables.json`.
pub const EXPECTED_TABLES_SHA256: &str = "a72add0cc17bbaaeef8f4fa9bbb4087cd55233b98cf95b4477d0007ebcacf117";

/// Environment variable naming a directory that replaces the bundled data.
pub const DATA_DIR_ENV: &str = "PAINLEVE_DATA_DIR";

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CatalogError {
    #[error("expected tables fail the checksum: sha256 {found}, pinned {expected}")]
    DataIntegrity { expected: String, found: String },
    #[error("cannot read {0}")]
    Io(String),
    #[error("{file}: {msg}")]
    Json { file: String, msg: String },
    #[error("{system}: {field}: {msg}")]
    Expr { system: String, field: String, msg: String },
    #[error("{system}: spectral type {string}: {err}")]
    Spectral { system: String, string: String, err: SpectralError },
    #[error("{system}: {err}")]
    Hamiltonian { system: String, err: HamiltonianError },
    #[error("{0}")]
    Inconsistent(String),
}

/// Which conserved quantity the fibration is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Fibration {
    H,
    G,
}

impl Fibration {
    pub fn symbol(self) -> Symbol {
        Symbol::new(match self {
            Fibration::H => "h",
            Fibration::G => "g",
        })
    }
}

impl fmt::Display for Fibration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol().name())
    }
}

/// Where the pinned pattern label of a spectral type comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelSource {
    /// Box of a degeneration diagram.
    Diagram,
    /// Superscript in the degeneration scheme.
    Scheme,
    /// Box of the scalar analogue in the two-dimensional diagram.
    Analogue,
    /// Table column only, no label.
    Table,
}

#[derive(Clone, Debug)]
pub struct SpectralTypeEntry {
    pub string: String,
    pub parsed: SpectralType,
    pub pattern: Option<String>,
    pub source: LabelSource,
}

/// Spectral curve as a polynomial in x, y and the names of the conserved
/// quantities, with the expressions those names stand for.
#[derive(Clone, Debug)]
pub struct SpectralCurveData {
    pub equation: MultiPoly,
    pub x: Symbol,
    pub y: Symbol,
    pub bindings: Vec<(Symbol, RationalFunction)>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub dimension: u32,
    pub spectral_types: Vec<SpectralTypeEntry>,
    pub space: Option<PhaseSpace>,
    /// Named Hamiltonians with delta kept symbolic.
    pub hamiltonians: Vec<(String, RationalFunction)>,
    /// Printed forms of quantities that were corrected.
    pub printed: Vec<(String, RationalFunction)>,
    pub lax: Option<LaxSystem>,
    pub spectral_curve: Option<SpectralCurveData>,
    pub curves: BTreeMap<Fibration, FiberedCurve>,
    pub expected: BTreeMap<Fibration, ExpectedRow>,
}

impl CatalogEntry {
    pub fn hamiltonian(&self, name: &str) -> Option<&RationalFunction> {
        self.hamiltonians.iter().find(|(n, _)| n == name).map(|(_, h)| h)
    }

    /// The Hamiltonians at delta = 0.
    pub fn conserved_quantities(&self) -> Vec<RationalFunction> {
        let Some(space) = &self.space else { return Vec::new() };
        let zero: HashMap<Symbol, Q> = [(space.delta(), Q::from_integer(0.into()))].into_iter().collect();
        self.hamiltonians
            .iter()
            .map(|(_, h)| h.eval(&zero).expect("delta = 0 is regular"))
            .collect()
    }

    /// True when the entry carries a full set of conserved quantities.
    pub fn verifiable(&self) -> bool {
        self.space.as_ref().is_some_and(|s| s.degrees() == self.hamiltonians.len())
    }

    /// The curve H = h at delta = 0 in the first canonical pair, for one
    /// degree of freedom.
    pub fn level_set(&self) -> Option<FiberedCurve> {
        let space = self.space.as_ref().filter(|s| s.degrees() == 1)?;
        let h = self.conserved_quantities().into_iter().next()?;
        let (q, p) = space.pairs()[0];
        Some(level_set_curve(&h, q, p, Fibration::H.symbol()))
    }

    pub fn fibrations(&self) -> Vec<Fibration> {
        if self.dimension == 2 {
            vec![Fibration::H]
        } else {
            vec![Fibration::H, Fibration::G]
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemFile {
    name: String,
    dimension: u32,
    spectral_types: Vec<SpectralTypeFile>,
    #[serde(default)]
    coordinates: Vec<(String, String)>,
    #[serde(default)]
    macros: Macros,
    #[serde(default)]
    hamiltonians: BTreeMap<String, String>,
    #[serde(default)]
    printed: BTreeMap<String, String>,
    #[serde(default)]
    relations: BTreeMap<String, String>,
    #[serde(default)]
    gauge: Vec<GaugeFile>,
    lax: Option<LaxFile>,
    spectral_curve: Option<SpectralCurveFile>,
    #[serde(default)]
    curves: BTreeMap<Fibration, serde_json::Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpectralTypeFile {
    #[serde(rename = "type")]
    string: String,
    pattern: Option<String>,
    source: LabelSource,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GaugeFile {
    symbol: String,
    rate: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LaxFile {
    x: String,
    a: Vec<Vec<String>>,
    b: Vec<Vec<String>>,
    hamiltonian: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpectralCurveFile {
    equation: String,
    x: String,
    y: String,
    bindings: BTreeMap<String, String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LevelSetFile {
    #[allow(dead_code)]
    shape: String,
    of: String,
    fibration_variable: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Genus1Row {
    pub system: String,
    pub fibration: Fibration,
    pub kodaira: String,
    pub dynkin: String,
}

/// One row of the genus-two tables, cells as printed.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableRow {
    pub system: String,
    pub fibration: Fibration,
    pub hamiltonian: String,
    pub spectral_type: String,
    pub nu_type: String,
    pub dynkin: String,
    pub stable: String,
    pub phi: String,
    pub ogg: String,
    pub nu: String,
    pub page: String,
}

impl TableRow {
    pub fn expected(&self) -> ExpectedRow {
        ExpectedRow {
            nu_type: self.nu_type.clone(),
            dynkin: self.dynkin.clone(),
            stable: self.stable.clone(),
            phi: self.phi.clone(),
            ogg: self.ogg.clone(),
            nu: self.nu.clone(),
            page: self.page.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExpectedTables {
    pub genus1: Vec<Genus1Row>,
    pub table5: Vec<TableRow>,
    pub table6: Vec<TableRow>,
}

/// Parses the expected tables after checking their pinned checksum.
pub fn parse_expected_tables(text: &str) -> Result<ExpectedTables, CatalogError> {
    let found = format!("{:x}", Sha256::digest(text.as_bytes()));
    if found != EXPECTED_TABLES_SHA256 {
        return Err(CatalogError::DataIntegrity {
            expected: EXPECTED_TABLES_SHA256.to_string(),
            found,
        });
    }
    serde_json::from_str(text).map_err(|e| CatalogError::Json {
        file: "expected_tables.json".into(),
        msg: e.to_string(),
    })
}

/// Loads the bundled catalog, or the one under `$PAINLEVE_DATA_DIR`.
pub fn load_catalog() -> Result<Vec<CatalogEntry>, CatalogError> {
    match std::env::var_os(DATA_DIR_ENV) {
        Some(dir) if !dir.is_empty() => load_catalog_from(Path::new(&dir)),
        _ => {
            let systems: Vec<(String, String)> =
                embedded::SYSTEMS.iter().map(|(n, s)| (n.to_string(), s.to_string())).collect();
            assemble(embedded::EXPECTED_TABLES, &systems)
        }
    }
}

/// The checksummed expected tables, bundled or under `$PAINLEVE_DATA_DIR`.
pub fn load_expected_tables() -> Result<ExpectedTables, CatalogError> {
    match std::env::var_os(DATA_DIR_ENV) {
        Some(dir) if !dir.is_empty() => {
            let p = Path::new(&dir).join("expected_tables.json");
            let text = std::fs::read_to_string(&p).map_err(|_| CatalogError::Io(p.display().to_string()))?;
            parse_expected_tables(&text)
        }
        _ => parse_expected_tables(embedded::EXPECTED_TABLES),
    }
}

/// Loads `expected_tables.json` and `systems/*.json` from a directory.
pub fn load_catalog_from(dir: &Path) -> Result<Vec<CatalogEntry>, CatalogError> {
    let read = |p: PathBuf| std::fs::read_to_string(&p).map_err(|_| CatalogError::Io(p.display().to_string()));
    let tables = read(dir.join("expected_tables.json"))?;
    let sys_dir = dir.join("systems");
    let mut names: Vec<PathBuf> = std::fs::read_dir(&sys_dir)
        .map_err(|_| CatalogError::Io(sys_dir.display().to_string()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    names.sort();
    let mut systems = Vec::new();
    for p in names {
        let name = p.file_name().unwrap().to_string_lossy().to_string();
        systems.push((name, read(p)?));
    }
    assemble(&tables, &systems)
}

pub fn find<'a>(catalog: &'a [CatalogEntry], name: &str) -> Option<&'a CatalogEntry> {
    catalog.iter().find(|e| e.name == name)
}

fn assemble(tables: &str, systems: &[(String, String)]) -> Result<Vec<CatalogEntry>, CatalogError> {
    let tables = parse_expected_tables(tables)?;
    let mut rows: HashMap<String, BTreeMap<Fibration, ExpectedRow>> = HashMap::new();
    for r in &tables.genus1 {
        let row = ExpectedRow {
            nu_type: r.kodaira.clone(),
            dynkin: r.dynkin.clone(),
            stable: String::new(),
            phi: String::new(),
            ogg: String::new(),
            nu: String::new(),
            page: String::new(),
        };
        rows.entry(r.system.clone()).or_default().insert(r.fibration, row);
    }
    for r in tables.table5.iter().chain(&tables.table6) {
        rows.entry(r.system.clone()).or_default().insert(r.fibration, r.expected());
    }
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for (file, text) in systems {
        let f: SystemFile = serde_json::from_str(text).map_err(|e| CatalogError::Json {
            file: file.clone(),
            msg: e.to_string(),
        })?;
        if !seen.insert(f.name.clone()) {
            return Err(CatalogError::Inconsistent(format!("{} appears twice", f.name)));
        }
        let mut e = build_entry(f)?;
        e.expected = rows.remove(&e.name).unwrap_or_default();
        for fib in e.fibrations() {
            if !e.expected.contains_key(&fib) {
                return Err(CatalogError::Inconsistent(format!("{} has no expected {}-row", e.name, fib)));
            }
        }
        out.push(e);
    }
    if let Some(name) = rows.keys().min() {
        return Err(CatalogError::Inconsistent(format!("table row for unknown system {}", name)));
    }
    Ok(out)
}

fn build_entry(f: SystemFile) -> Result<CatalogEntry, CatalogError> {
    let system = f.name.clone();
    let expr_err = |field: &str, msg: String| CatalogError::Expr {
        system: system.clone(),
        field: field.to_string(),
        msg,
    };
    let env_none = HashMap::new();
    let parse = |field: &str, s: &str, env: &HashMap<String, RationalFunction>| {
        parse_expr_with(s, &f.macros, env).map_err(|e| expr_err(field, e.to_string()))
    };

    let spectral_types = f
        .spectral_types
        .iter()
        .map(|t| {
            let parsed = parse_spectral_type(&t.string).map_err(|err| CatalogError::Spectral {
                system: system.clone(),
                string: t.string.clone(),
                err,
            })?;
            Ok(SpectralTypeEntry {
                string: t.string.clone(),
                parsed,
                pattern: t.pattern.clone(),
                source: t.source,
            })
        })
        .collect::<Result<Vec<_>, CatalogError>>()?;

    let mut relations = HashMap::new();
    for (k, v) in &f.relations {
        relations.insert(Symbol::new(k), parse(&format!("relations.{}", k), v, &env_none)?);
    }
    let apply = |field: &str, r: RationalFunction| -> Result<RationalFunction, CatalogError> {
        if relations.is_empty() {
            Ok(r)
        } else {
            r.subs(&relations).map_err(|e| expr_err(field, e.to_string()))
        }
    };
    let mut hamiltonians = Vec::new();
    for (k, v) in &f.hamiltonians {
        hamiltonians.push((k.clone(), apply(k, parse(k, v, &env_none)?)?));
    }
    let mut printed = Vec::new();
    for (k, v) in &f.printed {
        printed.push((k.clone(), parse(&format!("printed.{}", k), v, &env_none)?));
    }

    let mut gauge = Vec::new();
    for g in &f.gauge {
        gauge.push((Symbol::new(&g.symbol), parse("gauge", &g.rate, &env_none)?));
    }
    let lax_parts = match &f.lax {
        Some(l) => {
            let matrix = |rows: &Vec<Vec<String>>, field: &str| -> Result<Matrix, CatalogError> {
                let rows = rows
                    .iter()
                    .map(|r| r.iter().map(|s| parse(field, s, &env_none)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                Matrix::from_rows(rows).map_err(|err| CatalogError::Hamiltonian {
                    system: system.clone(),
                    err,
                })
            };
            Some((
                Symbol::new(&l.x),
                matrix(&l.a, "lax.a")?,
                matrix(&l.b, "lax.b")?,
                parse("lax.hamiltonian", &l.hamiltonian, &env_none)?,
            ))
        }
        None => None,
    };

    let space = if f.coordinates.is_empty() {
        None
    } else {
        let pairs: Vec<(Symbol, Symbol)> =
            f.coordinates.iter().map(|(q, p)| (Symbol::new(q), Symbol::new(p))).collect();
        let (t, delta) = (Symbol::new("t"), Symbol::new("delta"));
        let mut fixed: BTreeSet<Symbol> = pairs.iter().flat_map(|(q, p)| [*q, *p]).collect();
        fixed.extend([t, delta]);
        fixed.extend(gauge.iter().map(|g| g.0));
        let mut params = BTreeSet::new();
        for (_, h) in &hamiltonians {
            params.extend(h.variables());
        }
        if let Some((x, a, b, h)) = &lax_parts {
            for m in [a, b] {
                for e in m.entries() {
                    params.extend(e.variables());
                }
            }
            params.extend(h.variables());
            params.remove(x);
        }
        let params: Vec<Symbol> = params.difference(&fixed).copied().collect();
        let space = PhaseSpace::new(pairs, params, gauge, t, delta).map_err(|err| CatalogError::Hamiltonian {
            system: system.clone(),
            err,
        })?;
        Some(space)
    };

    let lax = match (lax_parts, &space) {
        (Some((x, a, b, h)), Some(space)) => {
            Some(LaxSystem::new(x, a, b, h, space.clone()).map_err(|err| CatalogError::Hamiltonian {
                system: system.clone(),
                err,
            })?)
        }
        (Some(_), None) => return Err(expr_err("lax", "Lax data needs coordinates".into())),
        _ => None,
    };

    let spectral_curve = match &f.spectral_curve {
        Some(c) => {
            let equation = parse_expr(&c.equation, &Macros::new())
                .ok()
                .and_then(|r| r.as_poly().cloned())
                .ok_or_else(|| expr_err("spectral_curve", "equation is not a polynomial".into()))?;
            let env: HashMap<String, RationalFunction> = hamiltonians.iter().cloned().collect();
            let mut bindings = Vec::new();
            for (k, v) in &c.bindings {
                bindings.push((Symbol::new(k), parse("spectral_curve.bindings", v, &env)?));
            }
            Some(SpectralCurveData {
                equation,
                x: Symbol::new(&c.x),
                y: Symbol::new(&c.y),
                bindings,
            })
        }
        None => None,
    };

    let mut curves = BTreeMap::new();
    for (fib, v) in &f.curves {
        let curve = if v.get("shape").and_then(|s| s.as_str()) == Some("level_set") {
            let ls: LevelSetFile =
                serde_json::from_value(v.clone()).map_err(|e| expr_err("curves", e.to_string()))?;
            let h = hamiltonians
                .iter()
                .find(|(n, _)| *n == ls.of)
                .map(|(_, h)| h.clone())
                .ok_or_else(|| expr_err("curves", format!("no Hamiltonian {}", ls.of)))?;
            let (q, p) = space
                .as_ref()
                .and_then(|s| s.pairs().first().copied())
                .ok_or_else(|| expr_err("curves", "level sets need coordinates".into()))?;
            let zero: HashMap<Symbol, Q> = [(Symbol::new("delta"), Q::from_integer(0.into()))].into_iter().collect();
            let h = h.eval(&zero).map_err(|e| expr_err("curves", e.to_string()))?;
            level_set_curve(&h, q, p, Symbol::new(&ls.fibration_variable))
        } else {
            let cj: CurveJson = serde_json::from_value(v.clone()).map_err(|e| expr_err("curves", e.to_string()))?;
            cj.to_curve().map_err(|e| expr_err("curves", e.to_string()))?
        };
        curves.insert(*fib, curve);
    }

    Ok(CatalogEntry {
        name: f.name,
        dimension: f.dimension,
        spectral_types,
        space,
        hamiltonians,
        printed,
        lax,
        spectral_curve,
        curves,
        expected: BTreeMap::new(),
    })
}

/// The curve H(q, p) = h, cleared of denominators, as a plane curve in (q, p).
pub fn level_set_curve(h: &RationalFunction, q: Symbol, p: Symbol, fibration: Symbol) -> FiberedCurve {
    let diff = h - &RationalFunction::var(fibration);
    FiberedCurve::Spectral(SpectralCurve {
        poly: diff.num().clone(),
        x: q,
        y: p,
        fibration,
    })
}

#[cfg(test)]
mod tests;
