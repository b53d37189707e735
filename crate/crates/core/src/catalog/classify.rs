use serde::Serialize;
use thiserror::Error;

use crate::algebra::Witness;
use crate::curves::{reduce_to_weierstrass, CurveError, FiberedCurve, WeierstrassModel};
use crate::kodaira::{classify_g1_at_infinity, G1FiberReport, KodairaError};
use crate::liu::{classify_g2_at_infinity, ExpectedRow, G2FiberReport, LiuError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClassifyError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Kodaira(#[from] KodairaError),
    #[error(transparent)]
    Liu(#[from] LiuError),
}

/// Fiber at infinity of a fibered curve, with the comparison to a table row.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "genus")]
pub enum FiberReport {
    #[serde(rename = "1")]
    Genus1 {
        #[serde(flatten)]
        report: Box<G1FiberReport>,
        #[serde(skip_serializing_if = "Option::is_none")]
        expected: Option<ExpectedRow>,
        #[serde(skip_serializing_if = "Option::is_none")]
        agreement: Option<bool>,
    },
    #[serde(rename = "2")]
    Genus2(Box<G2FiberReport>),
}

impl FiberReport {
    pub fn agreement(&self) -> Option<bool> {
        match self {
            FiberReport::Genus1 { agreement, .. } => *agreement,
            FiberReport::Genus2(r) => r.agreement,
        }
    }

    /// Kodaira symbol or Namikawa-Ueno stable type.
    pub fn computed_label(&self) -> String {
        match self {
            FiberReport::Genus1 { report, .. } => report.kodaira.to_string(),
            FiberReport::Genus2(r) => r.stable.to_string(),
        }
    }

    pub fn witness_seed(&self) -> u64 {
        match self {
            FiberReport::Genus1 { report, .. } => report.witness_seed,
            FiberReport::Genus2(r) => r.witness_seed,
        }
    }
}

/// Drops TeX markup: dollars, roman switches, braces and explicit spaces;
/// fractions become a/b, tildes and products single characters.
pub fn normalize_label(s: &str) -> String {
    let mut t = s
        .replace("\\mathrm", "")
        .replace("\\rm", "")
        .replace("\\ ", "")
        .replace("\\times", "\u{d7}")
        .replace("\\tilde", "~");
    while let Some(i) = t.find("\\frac{") {
        let (num, rest) = brace_group(&t[i + 5..]);
        let (den, rest) = brace_group(rest);
        t = format!("{}{}/{}{}", &t[..i], num, den, rest);
    }
    t.chars().filter(|c| !matches!(c, '$' | '{' | '}') && !c.is_whitespace()).collect()
}

/// Splits "{a}rest" into ("a", "rest"); input without a leading group is returned as rest.
fn brace_group(s: &str) -> (&str, &str) {
    if !s.starts_with('{') {
        return ("", s);
    }
    let mut depth = 0;
    for (i, c) in s.char_indices() {
        match c {
            '{' => depth += 1,
            '}' => {
                depth -= 1;
                if depth == 0 {
                    return (&s[1..i], &s[i + 1..]);
                }
            }
            _ => {}
        }
    }
    (&s[1..], "")
}

fn kodaira_matches(expected: &str, report: &G1FiberReport) -> bool {
    let e: String = normalize_label(expected).chars().filter(|c| !matches!(c, '_' | '^')).collect();
    e == report.kodaira.to_string()
}

fn dynkin_matches(expected: &str, report: &G1FiberReport) -> bool {
    let e = normalize_label(expected);
    match &report.dynkin {
        Some(d) => e == *d,
        None => e.is_empty() || e == "-",
    }
}

/// Reduces the curve when needed and classifies its fiber at infinity.
pub fn classify_curve(
    curve: &FiberedCurve,
    expected: Option<&ExpectedRow>,
    witness: &mut Witness,
) -> Result<FiberReport, ClassifyError> {
    let model = match curve {
        FiberedCurve::G1(w) => WeierstrassModel::G1(w.clone()),
        FiberedCurve::G2(w) => WeierstrassModel::G2(w.clone()),
        FiberedCurve::Spectral(c) => reduce_to_weierstrass(c)?.model,
    };
    Ok(match model {
        WeierstrassModel::G1(w) => {
            let report = Box::new(classify_g1_at_infinity(&w, witness)?);
            let agreement =
                expected.map(|e| kodaira_matches(&e.nu_type, &report) && dynkin_matches(&e.dynkin, &report));
            FiberReport::Genus1 {
                report,
                expected: expected.cloned(),
                agreement,
            }
        }
        WeierstrassModel::G2(w) => FiberReport::Genus2(Box::new(classify_g2_at_infinity(&w, expected, witness)?)),
    })
}
