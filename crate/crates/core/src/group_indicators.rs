//! Higher Frobenius–Schur indicators ν_m(χ) = (1/|G|) Σ_g χ(g^m) of G-characters.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::characters::{CharLabel, ClassFunction};
use crate::error::{Error, Result};
use crate::group::{Group, GroupParams};

/// Maximum distance from an integer an indicator may have.
pub const INTEGRALITY_TOLERANCE: f64 = 1e-6;

/// How an indicator value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IndicatorPath {
    Bruteforce,
    ClosedForm,
    Zform,
    Charform,
    Central,
}

impl IndicatorPath {
    pub fn as_str(&self) -> &'static str {
        match self {
            IndicatorPath::Bruteforce => "bruteforce",
            IndicatorPath::ClosedForm => "closed_form",
            IndicatorPath::Zform => "zform",
            IndicatorPath::Charform => "charform",
            IndicatorPath::Central => "central",
        }
    }
}

impl fmt::Display for IndicatorPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IndicatorValue {
    pub m: u64,
    pub raw: Complex64,
    pub rounded: i64,
    pub paths: BTreeMap<IndicatorPath, i64>,
}

impl IndicatorValue {
    /// Rounds `raw`, failing if it is not within [`INTEGRALITY_TOLERANCE`] of an integer.
    pub fn from_raw(m: u64, raw: Complex64, path: IndicatorPath, context: &str) -> Result<Self> {
        let rounded = raw.re.round();
        if (raw - Complex64::new(rounded, 0.0)).norm() >= INTEGRALITY_TOLERANCE {
            return Err(Error::NonIntegral { value: raw.re, m, context: context.to_string() });
        }
        let rounded = rounded as i64;
        Ok(IndicatorValue { m, raw, rounded, paths: BTreeMap::from([(path, rounded)]) })
    }

    /// Records another path's value, failing on disagreement.
    pub fn add_path(&mut self, path: IndicatorPath, value: i64, context: &str) -> Result<()> {
        self.paths.insert(path, value);
        if value != self.rounded {
            return Err(Error::PathDisagreement(format!(
                "{context}, m = {}: {}",
                self.m,
                self.describe_paths()
            )));
        }
        Ok(())
    }

    pub fn agree(&self) -> bool {
        self.paths.values().all(|v| *v == self.rounded)
    }

    pub fn describe_paths(&self) -> String {
        self.paths.iter().map(|(p, v)| format!("{p}={v}")).collect::<Vec<_>>().join(", ")
    }
}

/// g ↦ g^m for every m in 1..=max_m, as index permutation-like tables over G.
#[derive(Clone, Debug)]
pub struct PowerTables {
    tables: Vec<Vec<u32>>,
}

impl PowerTables {
    pub fn new(group: &Group, max_m: u64) -> Self {
        PowerTables { tables: (1..=max_m).map(|m| group.power_table(m)).collect() }
    }

    pub fn max_m(&self) -> u64 {
        self.tables.len() as u64
    }

    pub fn get(&self, m: u64) -> Option<&[u32]> {
        m.checked_sub(1).and_then(|i| self.tables.get(i as usize)).map(Vec::as_slice)
    }
}

/// (1/|G|) Σ_g χ(g^m), with `powers[idx(g)] = idx(g^m)`.
pub fn nu_group_bruteforce_with(chi: &ClassFunction, m: u64, powers: &[u32]) -> Result<IndicatorValue> {
    if chi.domain().order() != powers.len() {
        return Err(Error::Invalid("indicator needs a character of the whole group".into()));
    }
    let sum: Complex64 = powers.iter().map(|&p| chi.value_at_index(p as usize)).sum();
    let raw = sum / powers.len() as f64;
    IndicatorValue::from_raw(m, raw, IndicatorPath::Bruteforce, "group character")
}

pub fn nu_group_bruteforce(group: &Group, chi: &ClassFunction, m: u64) -> Result<IndicatorValue> {
    if m == 0 {
        return Err(Error::Invalid("m must be positive".into()));
    }
    nu_group_bruteforce_with(chi, m, &group.power_table(m))
}

fn divides(d: u64, n: u64) -> bool {
    n % d == 0
}

/// Closed-form ν_m of an irreducible G-character identified by its label.
pub fn nu_group_closed(params: &GroupParams, label: &CharLabel, m: u64) -> Result<i64> {
    if m == 0 {
        return Err(Error::Invalid("m must be positive".into()));
    }
    let even = u64::from(m % 2 == 0) as i64;
    let modulus = u64::from(params.modulus());
    let k = u64::from(params.k());
    match *label {
        CharLabel::LinearQuotient { a_neg, u_neg, v_neg } => {
            let trivial = !(a_neg || u_neg || v_neg);
            Ok(if trivial || m % 2 == 0 { 1 } else { 0 })
        }
        CharLabel::InducedH2 { r, t } => {
            // ⟨ψ_{mr,mt}, 1⟩ + δ_{2|m}
            let trivial = divides(u64::from(params.half()), m * u64::from(r)) && divides(k, m * u64::from(t));
            Ok(i64::from(trivial) + even)
        }
        CharLabel::InducedH1 { r, t } => {
            // ⟨φ_{mr,mt},1⟩ + δ_{2|m}(-1)^{m/2}(2⟨φ_{mr,mt/2},1⟩ - ⟨φ_{mr,mt},1⟩) + δ_{2|m} + δ_{4|m}
            let half_k = k / 2;
            let phi_trivial = |a: u64, b: u64| i64::from(divides(modulus, a) && divides(half_k, b));
            let full = phi_trivial(m * u64::from(r), m * u64::from(t));
            let mut value = full + even + i64::from(m % 4 == 0);
            if m % 2 == 0 {
                let sign = if (m / 2) % 2 == 0 { 1 } else { -1 };
                let halfway = phi_trivial(m * u64::from(r), (m / 2) * u64::from(t));
                value += sign * (2 * halfway - full);
            }
            Ok(value)
        }
        CharLabel::AbelianHom | CharLabel::InducedInCentralizer { .. } => Err(Error::Invalid(
            format!("{label} does not label an irreducible character of G"),
        )),
    }
}

/// Brute force and closed form for one character and one m, cross-checked.
pub fn nu_group(
    params: &GroupParams,
    chi: &ClassFunction,
    label: &CharLabel,
    m: u64,
    powers: &[u32],
) -> Result<IndicatorValue> {
    let mut value = nu_group_bruteforce_with(chi, m, powers)?;
    let closed = nu_group_closed(params, label, m)?;
    value.add_path(IndicatorPath::ClosedForm, closed, &label.to_string())?;
    Ok(value)
}
