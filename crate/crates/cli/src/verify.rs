//! Runs every invariant suite and folds the results into per-claim verdicts.

use std::fmt::Write as _;
use std::time::Instant;

use fsind_core::double::{gm_bruteforce_upto, gm_closed, GmCaseTally};
use fsind_core::group_indicators::{nu_group, PowerTables};
use fsind_core::structure::{
    center, conjugacy_classes, conjugacy_classes_bruteforce, expected_class_count, is_completely_real,
    is_generated_by_involutions,
};
use fsind_core::characters::subgroup_class_count;
use fsind_core::{ClassType, DoubleGroup, DoubleRow, Group, GroupParams, Structure};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::report::Format;
use crate::RunConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    OutOfScope,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::OutOfScope => "SKIP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub count: u64,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimVerdict {
    pub claim: String,
    pub statement: String,
    pub status: Status,
    pub checks: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub l: u32,
    pub k: u32,
    pub n2: u32,
    pub max_m: u64,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub claims: Vec<ClaimVerdict>,
    pub passed: bool,
    pub first_failure: Option<String>,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

type Outcome = Result<(u64, String), String>;

struct Runner {
    checks: Vec<CheckResult>,
    timings: bool,
}

impl Runner {
    fn run(&mut self, name: &str, f: impl FnOnce() -> Outcome) -> bool {
        let start = Instant::now();
        let outcome = f();
        let elapsed = self.timings.then(|| start.elapsed().as_secs_f64() * 1e3);
        let (status, count, detail) = match outcome {
            Ok((count, detail)) => (Status::Pass, count, detail),
            Err(detail) => (Status::Fail, 0, detail),
        };
        self.checks.push(CheckResult { name: name.into(), status, count, detail, elapsed_ms: elapsed });
        status == Status::Pass
    }

    fn blocked(&mut self, name: &str, on: &str) {
        self.checks.push(CheckResult {
            name: name.into(),
            status: Status::Fail,
            count: 0,
            detail: format!("not run: {on} failed"),
            elapsed_ms: None,
        });
    }

    fn passed(&self, name: &str) -> bool {
        self.checks.iter().any(|c| c.name == name && c.status == Status::Pass)
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Runs the full suite. `inject_fault` shifts n2 by 2 before anything is built.
pub fn cmd_verify(config: &RunConfig, inject_fault: bool) -> Result<VerificationReport, CliError> {
    let mut params = GroupParams::new(config.l, config.k)?;
    if inject_fault {
        params = params.with_tampered_n2(2);
    }
    let group = Group::new(params);
    let max_m = config.max_m_for(&group)?;
    let mut r = Runner { checks: Vec::new(), timings: config.timings };

    r.run("group-params", || {
        let m = u64::from(params.modulus());
        let (n1, n2) = (u64::from(params.n1()), u64::from(params.n2()));
        if n1 * n1 % m == 1 && n2 * n2 % m == 1 && n1 * n2 % m == m - 1 {
            Ok((3, format!("n1 = {n1}, n2 = {n2}")))
        } else {
            Err(format!("n1 = {n1}, n2 = {n2} violate n1² ≡ n2² ≡ 1, n1·n2 ≡ -1 mod {m}"))
        }
    });

    r.run("group-axioms", || {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let n = group.order();
        let samples = 2000u64;
        for _ in 0..samples {
            let x = group.element_at(rng.gen_range(0..n));
            let y = group.element_at(rng.gen_range(0..n));
            let z = group.element_at(rng.gen_range(0..n));
            let lhs = group.multiply(&group.multiply(&x, &y), &z);
            let rhs = group.multiply(&x, &group.multiply(&y, &z));
            if lhs != rhs {
                return Err(format!("({x}·{y})·{z} = {lhs} but {x}·({y}·{z}) = {rhs}"));
            }
            if !group.multiply(&group.inverse(&x), &x).is_identity() {
                return Err(format!("inverse of {x} fails"));
            }
        }
        let exponent = group.exponent().map_err(err)?;
        Ok((samples, format!("{samples} random triples, exponent {exponent}")))
    });

    r.run("center", || {
        let z = center(&group).map_err(err)?;
        Ok((z.order() as u64, format!("order {}", z.order())))
    });

    r.run("class-count", || {
        let found = conjugacy_classes_bruteforce(&group).len();
        let expected = expected_class_count(&group);
        if found == expected {
            Ok((found as u64, format!("{found} classes")))
        } else {
            Err(format!("brute force finds {found} classes, closed form predicts {expected}"))
        }
    });

    r.run("classes", || {
        let classes = conjugacy_classes(&group).map_err(err)?;
        let total: usize = classes.iter().map(|c| c.size()).sum();
        if total != group.order() || classes.iter().any(|c| group.order() % c.size() != 0) {
            return Err("class equation fails".into());
        }
        Ok((classes.len() as u64, "members, sizes and types match the closed forms".into()))
    });

    let mut structure = None;
    if r.passed("classes") {
        r.run("centralizers", || match Structure::build(&group) {
            Ok(s) => {
                let n = s.classes.len() as u64;
                structure = Some(s);
                Ok((n, "every centralizer matches its closed form and |class|·|C| = |G|".into()))
            }
            Err(e) => Err(e.to_string()),
        });
    } else {
        r.blocked("centralizers", "classes");
    }

    match &structure {
        Some(s) => {
            r.run("completely-real", || {
                if is_completely_real(&group, &s.classes) {
                    Ok((group.order() as u64, "every element is conjugate to its inverse".into()))
                } else {
                    Err("some element is not conjugate to its inverse".into())
                }
            });
            r.run("involution-generated", || match is_generated_by_involutions(&group) {
                Ok(true) => Ok((3, "v, uv, auv are involutions generating G".into())),
                Ok(false) => Err("v, uv, auv do not generate G".into()),
                Err(e) => Err(e.to_string()),
            });
        }
        None => {
            r.blocked("completely-real", "centralizers");
            r.blocked("involution-generated", "centralizers");
        }
    }

    let mut double = None;
    if structure.is_some() {
        r.run("character-tables", || {
            let d = DoubleGroup::build(group.clone()).map_err(err)?;
            let mut worst = d.g_table().orthogonality_defect().map_err(err)?;
            let mut tables = 1u64;
            for c in 0..d.structure().classes.len() {
                worst = worst.max(d.table(c).orthogonality_defect().map_err(err)?);
                tables += 1;
            }
            if worst > config.tolerance {
                return Err(format!("orthogonality defect {worst:e} exceeds {:e}", config.tolerance));
            }
            let degrees = d.g_table().degrees();
            double = Some(d);
            Ok((tables, format!("{} irreducibles of G, degrees sum of squares |G|, defect {worst:.1e}", degrees.len())))
        });
    } else {
        r.blocked("character-tables", "centralizers");
    }

    let Some(d) = double else {
        for name in [
            "label-completeness",
            "group-indicators",
            "total-orthogonality",
            "group-indicators-nonnegative",
            "gm-closed-form",
            "double-indicators",
            "double-self-dual",
            "double-negative-indicator",
        ] {
            r.blocked(name, "character-tables");
        }
        return Ok(finish(config, &group, max_m, r.checks));
    };

    r.run("label-completeness", || {
        let sum = d.dimension_square_sum();
        let order = group.order() as u64;
        if sum != order * order {
            return Err(format!("Σ dim² = {sum}, expected {}", order * order));
        }
        let expected: usize = (0..d.structure().classes.len())
            .map(|c| subgroup_class_count(&group, d.structure().centralizer_of_class(c)))
            .sum();
        if d.labels().len() != expected {
            return Err(format!("{} labels, centralizer class counts give {expected}", d.labels().len()));
        }
        Ok((d.labels().len() as u64, format!("{} simple modules, Σ dim² = {sum}", d.labels().len())))
    });

    let mut group_values = Vec::new();
    r.run("group-indicators", || {
        let tables = PowerTables::new(&group, max_m);
        for (e, (chi, label)) in d.g_table().irreducibles.iter().zip(&d.g_table().labels).enumerate() {
            for m in 1..=max_m {
                let v = nu_group(group.params(), chi, label, m, tables.get(m).expect("m ≤ max_m"))
                    .map_err(|x| format!("character {e} ({label}), m = {m}: {x}"))?;
                group_values.push((e, m, v.rounded));
            }
        }
        Ok((group_values.len() as u64, "brute force equals closed form".into()))
    });
    let ran_group = r.passed("group-indicators");
    r.run("total-orthogonality", || {
        if !ran_group {
            return Err("group indicators unavailable".into());
        }
        let nu2 = group_indicator_at(&d, &group, 2).map_err(err)?;
        match nu2.iter().position(|v| *v != 1) {
            Some(e) => Err(format!("character {e}, m = 2: ν = {}", nu2[e])),
            None => Ok((nu2.len() as u64, "ν_2 = 1 for every irreducible of G".into())),
        }
    });
    r.run("group-indicators-nonnegative", || {
        if !ran_group {
            return Err("group indicators unavailable".into());
        }
        match group_values.iter().find(|(_, _, v)| *v < 0) {
            Some((e, m, v)) => Err(format!("character {e}, m = {m}: ν = {v}")),
            None => Ok((group_values.len() as u64, format!("ν_m ≥ 0 for m = 1..{max_m}"))),
        }
    });

    r.run("gm-closed-form", || {
        let mut tally = GmCaseTally::default();
        let mut records = 0u64;
        for class in d.structure().classes.iter().filter(|c| c.type_tag != ClassType::Central) {
            let x = class.representative;
            for rec in gm_bruteforce_upto(&group, &x, max_m) {
                let closed = gm_closed(&group, &x, rec.m, &mut tally).map_err(err)?;
                let brute: Vec<_> = rec.member_elements(&group).collect();
                if closed != brute {
                    let a = group
                        .enumerate()
                        .iter()
                        .find(|a| closed.contains(a) != brute.contains(a))
                        .expect("sets differ");
                    return Err(format!("G_{}({x}) disagrees at a = {a}", rec.m));
                }
                records += 1;
            }
        }
        let unexercised = tally.unexercised();
        if !unexercised.is_empty() {
            let names: Vec<&str> = unexercised.iter().map(|c| c.name()).collect();
            return Err(format!("cases never produced a member: {}", names.join(", ")));
        }
        Ok((records, "closed form equals brute force; all eleven cases exercised".into()))
    });

    let ms: Vec<u64> = (1..=max_m.max(2)).collect();
    let mut rows: Vec<DoubleRow> = Vec::new();
    r.run("double-indicators", || {
        rows = d.sweep(&ms).map_err(err)?;
        if let Some(bad) = rows.iter().find(|row| !row.agree() || row.value.rounded.unsigned_abs() > row.label.dim) {
            return Err(format!(
                "{} m = {}: {}",
                d.describe(&bad.label),
                bad.value.m,
                bad.value.describe_paths()
            ));
        }
        Ok((rows.len() as u64, "z_m form, character form and closed form agree".into()))
    });
    let ran_double = r.passed("double-indicators");
    r.run("double-self-dual", || {
        if !ran_double {
            return Err("double indicators unavailable".into());
        }
        let nu2: Vec<&DoubleRow> = rows.iter().filter(|row| row.value.m == 2).collect();
        match nu2.iter().find(|row| row.value.rounded.abs() != 1) {
            Some(row) => Err(format!("{} m = 2: ν = {}", d.describe(&row.label), row.value.rounded)),
            None => Ok((nu2.len() as u64, "ν_2 = ±1 for every simple module".into())),
        }
    });
    r.run("double-negative-indicator", || {
        let neg = d.find_negative_indicators().map_err(err)?;
        if neg.is_empty() {
            return Err("no simple module has ν_2 = -1".into());
        }
        let z = group.element(i64::from(group.params().half()), 0, 0);
        for row in &neg {
            let rep = d.class(&row.label).representative;
            let eta_z = d.eta(&row.label).value(&group, &z).re;
            if d.class(&row.label).type_tag != ClassType::TypeIII || rep.i % 2 != 0 || rep.s % 2 != 1 || eta_z > -0.5 {
                return Err(format!("unexpected negative module {}", d.describe(&row.label)));
            }
        }
        Ok((neg.len() as u64, format!("{} simple modules with ν_2 = -1", neg.len())))
    });

    Ok(finish(config, &group, max_m, r.checks))
}

fn group_indicator_at(d: &DoubleGroup, group: &Group, m: u64) -> fsind_core::Result<Vec<i64>> {
    let table = group.power_table(m);
    d.g_table()
        .irreducibles
        .iter()
        .map(|chi| fsind_core::group_indicators::nu_group_bruteforce_with(chi, m, &table).map(|v| v.rounded))
        .collect()
}

fn finish(config: &RunConfig, group: &Group, max_m: u64, checks: Vec<CheckResult>) -> VerificationReport {
    let status_of = |names: &[&str]| {
        if names.iter().all(|n| checks.iter().any(|c| c.name == *n && c.status == Status::Pass)) {
            Status::Pass
        } else {
            Status::Fail
        }
    };
    let claim = |claim: &str, statement: &str, names: &[&str]| ClaimVerdict {
        claim: claim.into(),
        statement: statement.into(),
        status: status_of(names),
        checks: names.iter().map(|n| n.to_string()).collect(),
    };
    let claims = vec![
        claim("completely-real", "every element of G is conjugate to its inverse", &["completely-real"]),
        claim("involution-generated", "G is generated by involutions", &["involution-generated"]),
        ClaimVerdict {
            claim: "centralizers-monomial".into(),
            statement: "every centralizer is an M-group (out of scope: M-group check not implemented)".into(),
            status: Status::OutOfScope,
            checks: Vec::new(),
        },
        claim("totally-orthogonal", "ν_2(χ) = 1 for every irreducible χ of G", &["group-indicators", "total-orthogonality"]),
        claim(
            "group-indicators-nonnegative",
            "ν_m(χ) ≥ 0 for every irreducible χ of G",
            &["group-indicators", "group-indicators-nonnegative"],
        ),
        claim("double-self-dual", "every simple D(G)-module is self-dual", &["double-indicators", "double-self-dual"]),
        claim(
            "double-negative-indicator",
            "some simple D(G)-module has ν_2 = -1",
            &["double-negative-indicator"],
        ),
    ];
    let first_failure = checks
        .iter()
        .find(|c| c.status == Status::Fail)
        .map(|c| format!("{}: {}", c.name, c.detail));
    VerificationReport {
        l: group.params().l(),
        k: group.params().k(),
        n2: group.params().n2(),
        max_m,
        seed: config.seed,
        passed: first_failure.is_none(),
        first_failure,
        checks,
        claims,
    }
}

pub fn render_verification(report: &VerificationReport, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(report)? + "\n"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["kind", "name", "status", "count", "detail"])?;
            for c in &report.checks {
                w.write_record(["check", &c.name, c.status.as_str(), &c.count.to_string(), &c.detail])?;
            }
            for c in &report.claims {
                w.write_record(["claim", &c.claim, c.status.as_str(), "", &c.statement])?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "verify l = {}, k = {}, n2 = {}, m = 1..{}, seed {}",
                report.l, report.k, report.n2, report.max_m, report.seed
            );
            for c in &report.checks {
                let time = c.elapsed_ms.map(|t| format!("  [{t:.1} ms]")).unwrap_or_default();
                let _ = writeln!(out, "{} {:<30} {:>8}  {}{}", c.status.as_str(), c.name, c.count, c.detail, time);
            }
            let _ = writeln!(out, "claims:");
            for c in &report.claims {
                let _ = writeln!(out, "{} {:<30} {}", c.status.as_str(), c.claim, c.statement);
            }
            match &report.first_failure {
                None => {
                    let _ = writeln!(out, "all checks passed");
                }
                Some(f) => {
                    let _ = writeln!(out, "FAILED at {f}");
                }
            }
            Ok(out)
        }
    }
}
