//! The reproduction suite: every finite witness from the fixtures plus the
//! structural theorems over all enumerated algebras up to a bound.

use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::category::SURJECTION_SEARCH_BOUND;
use crate::category::{
    check_one_regularity, check_subtractive_terms, compose_relations, one_regularity_violation,
    scan_permutability,
};
use crate::congruence::quotient;
use crate::document::{parse_document, AlgebraDocument};
use crate::enumerate::{are_isomorphic, enumerate};
use crate::error::Error;
use crate::fixtures::{self, FIXTURE_FILES};
use crate::lattice::FiniteLattice;
use crate::laws::{self, LawFailure};
use crate::magma::{check_axioms, is_l, Axiom, Kind};
use crate::morphism::ElementMap;
use crate::spectrum::FiniteSpace;

pub const DEFAULT_MAX_ORDER: usize = 4;
pub const MAX_SUITE_ORDER: usize = 5;
pub const MAX_ORDER_ENV: &str = "LALG_MAX_ORDER";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub witnesses: Vec<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerdictReport {
    pub command: String,
    pub algebra: String,
    pub checks: Vec<CheckResult>,
    pub timing_ms: u128,
}

impl VerdictReport {
    pub fn new(command: impl Into<String>, algebra: impl Into<String>) -> Self {
        VerdictReport {
            command: command.into(),
            algebra: algebra.into(),
            checks: Vec::new(),
            timing_ms: 0,
        }
    }

    /// Records a check. Failing checks always carry a witness; if none was
    /// supplied a generic one is added.
    pub fn push(&mut self, name: impl Into<String>, passed: bool, mut witnesses: Vec<Value>) {
        if !passed && witnesses.is_empty() {
            witnesses.push(json!("check returned false"));
        }
        self.checks.push(CheckResult {
            name: name.into(),
            passed,
            witnesses,
        });
    }

    pub fn push_failures(&mut self, name: impl Into<String>, failures: Vec<LawFailure>) {
        let witnesses = failures
            .into_iter()
            .map(|f| json!({"law": f.law, "detail": f.detail}))
            .collect::<Vec<_>>();
        self.push(name, witnesses.is_empty(), witnesses);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Where fixture documents come from.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum FixtureSource {
    /// The copies compiled into the library.
    #[default]
    Embedded,
    /// `table1.json`, `table2.json` and `two_element.json` in a directory.
    Directory(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_order: usize,
    pub fixtures: FixtureSource,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_order: DEFAULT_MAX_ORDER,
            fixtures: FixtureSource::Embedded,
        }
    }
}

/// The order bound: an explicit value wins, then `LALG_MAX_ORDER`, then the
/// default. Values above [`MAX_SUITE_ORDER`] are rejected.
pub fn resolve_max_order(explicit: Option<usize>) -> Result<usize, Error> {
    let from_env = std::env::var(MAX_ORDER_ENV)
        .ok()
        .map(|v| {
            v.trim()
                .parse::<usize>()
                .map_err(|_| Error::Precondition(format!("{MAX_ORDER_ENV}={v:?} is not a number")))
        })
        .transpose()?;
    let order = explicit.or(from_env).unwrap_or(DEFAULT_MAX_ORDER);
    if order == 0 || order > MAX_SUITE_ORDER {
        return Err(Error::Capacity {
            what: "max order",
            requested: order,
            limit: MAX_SUITE_ORDER,
            hint: "",
        });
    }
    Ok(order)
}

#[derive(Debug, thiserror::Error)]
pub enum SetupError {
    #[error("fixture {path} is missing or unreadable: {reason}")]
    MissingFixture { path: PathBuf, reason: String },
    #[error("fixture {path}: {diagnostic}")]
    BadFixture {
        path: PathBuf,
        diagnostic: crate::document::Diagnostic,
    },
    #[error(transparent)]
    Config(#[from] Error),
}

pub struct WitnessFixtures {
    pub table1: AlgebraDocument,
    pub table2: AlgebraDocument,
    pub two_element: AlgebraDocument,
}

pub fn load_fixtures(source: &FixtureSource) -> Result<WitnessFixtures, SetupError> {
    match source {
        FixtureSource::Embedded => Ok(WitnessFixtures {
            table1: fixtures::table1_document(),
            table2: fixtures::table2_document(),
            two_element: fixtures::two_element_document(),
        }),
        FixtureSource::Directory(dir) => {
            let load = |file: &str| -> Result<AlgebraDocument, SetupError> {
                let path = dir.join(file);
                let bytes = std::fs::read(&path).map_err(|e| SetupError::MissingFixture {
                    path: path.clone(),
                    reason: e.to_string(),
                })?;
                parse_document(&bytes)
                    .map_err(|diagnostic| SetupError::BadFixture { path, diagnostic })
            };
            Ok(WitnessFixtures {
                table1: load(FIXTURE_FILES[0])?,
                table2: load(FIXTURE_FILES[1])?,
                two_element: load(FIXTURE_FILES[2])?,
            })
        }
    }
}

/// Writes the shipped fixtures into `dir`.
pub fn write_fixtures(dir: &Path) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    for (file, text) in FIXTURE_FILES.iter().zip([
        fixtures::TABLE1_JSON,
        fixtures::TABLE2_JSON,
        fixtures::TWO_ELEMENT_JSON,
    ]) {
        std::fs::write(dir.join(file), text)?;
    }
    Ok(())
}

fn kind_check(report: &mut VerdictReport, label: &str, doc: &AlgebraDocument) {
    let name = format!("{label}.declared-kind");
    let Ok(m) = doc.to_table() else {
        report.push(name, false, vec![json!("table does not validate")]);
        return;
    };
    let axioms = check_axioms(&m);
    let kind = doc.kind.unwrap_or(Kind::PreL);
    let witnesses = axioms
        .violations
        .iter()
        .filter(|v| kind == Kind::L || v.axiom != Axiom::Antisymmetric)
        .map(|v| {
            let named: Vec<String> = v.witness.iter().map(|&i| doc.name(i)).collect();
            json!({"axiom": v.axiom, "witness": named})
        })
        .collect();
    report.push(
        format!("{name} ({})", kind.name()),
        kind.admits(&axioms),
        witnesses,
    );
}

pub fn run_paper_suite(config: &SuiteConfig) -> Result<VerdictReport, SetupError> {
    let start = Instant::now();
    let fx = load_fixtures(&config.fixtures)?;
    let mut report = VerdictReport::new(
        "paper-suite",
        format!(
            "{}; {}; {}",
            fx.table1.source.as_deref().unwrap_or("table1"),
            fx.table2.source.as_deref().unwrap_or("table2"),
            fx.two_element.source.as_deref().unwrap_or("two_element"),
        ),
    );
    if config.max_order == 0 || config.max_order > MAX_SUITE_ORDER {
        return Err(SetupError::Config(Error::Capacity {
            what: "max order",
            requested: config.max_order,
            limit: MAX_SUITE_ORDER,
            hint: "",
        }));
    }

    // fixtures against their declared kinds
    kind_check(&mut report, "table1", &fx.table1);
    kind_check(&mut report, "table2", &fx.table2);
    kind_check(&mut report, "two-element", &fx.two_element);

    let (Ok(t1), Ok(t2), Ok(x)) = (
        fx.table1.to_table(),
        fx.table2.to_table(),
        fx.two_element.to_table(),
    ) else {
        report.timing_ms = start.elapsed().as_millis();
        return Ok(report);
    };

    let t2_axioms = check_axioms(&t2);
    let anti: Vec<Value> = t2_axioms
        .witnesses(Axiom::Antisymmetric)
        .map(|w| json!(w.iter().map(|&i| fx.table2.name(i)).collect::<Vec<_>>()))
        .collect();
    report.push(
        "table2.antisymmetry-fails-at-(a,b)",
        t2_axioms.is_pre_l() && anti == vec![json!(["a", "b"])],
        if anti.is_empty() { vec![] } else { anti },
    );

    // non-variety witness
    match ElementMap::new(t1.clone(), t2.clone(), vec![2, 0, 1, 2]) {
        Ok(f) => {
            let w = f.morphism_violation().map(|(a, b)| json!([a, b]));
            report.push(
                "witness-f.is-morphism",
                w.is_none(),
                w.into_iter().collect(),
            );
            report.push("witness-f.surjective", f.is_surjective(), vec![]);
            report.push(
                "witness-f.domain-l-codomain-not-l",
                is_l(&t1) && check_axioms(&t2).is_pre_l() && !is_l(&t2),
                vec![],
            );
            let iso = quotient(&t1, &f.kernel_partition())
                .ok()
                .and_then(|q| are_isomorphic(&q.algebra, &t2));
            report.push(
                "quotient-by-Eq(f)-isomorphic-to-table2",
                iso.is_some(),
                vec![],
            );
        }
        Err(e) => report.push("witness-f.is-morphism", false, vec![json!(e.to_string())]),
    }

    // terms
    report.push(
        "subtractive-terms.table1-table2",
        check_subtractive_terms(&t1) && check_subtractive_terms(&t2),
        vec![],
    );
    let reg = one_regularity_violation(&t2).map(|(a, b)| json!([a, b]));
    report.push(
        "one-regularity.table1-holds-table2-fails-at-(a,b)",
        check_one_regularity(&t1) && reg == Some(json!([0, 1])),
        reg.into_iter().collect(),
    );

    // kernel pairs and the composition counterexample
    let square_ok = crate::magma::product(&x, &x)
        .map(|sq| crate::magma::is_subalgebra(&sq, fixtures::relation_subset()))
        .unwrap_or(false);
    report.push("R-is-subalgebra-of-XxX", square_ok, vec![]);
    if square_ok {
        let (r, _) = fixtures::relation_algebra();
        let (p1, p2) = fixtures::relation_projections();
        let (eq1, eq2) = (p1.kernel_pair(), p2.kernel_pair());
        let symmetric = |rel: &crate::PairRelation| {
            let mut out = rel.clone();
            for (a, b) in rel.pairs().collect::<Vec<_>>() {
                out.insert(b, a);
            }
            out
        };
        report.push(
            "kernel-pairs.are-symmetric-closures-of-listed-sets",
            symmetric(&fixtures::listed_eq_p1()) == eq1
                && symmetric(&fixtures::listed_eq_p2()) == eq2,
            vec![],
        );
        let e = fixtures::relation_element;
        let (a, c) = (e(1, 0), e(0, 1));
        let p2_after_p1 = compose_relations(&eq1, &eq2).map(|rel| rel.contains(a, c));
        let p1_after_p2 = compose_relations(&eq2, &eq1).map(|rel| rel.contains(a, c));
        report.push(
            "composition.((1,0),(0,1))-in-Eq(p2)oEq(p1)",
            p2_after_p1 == Ok(true),
            vec![],
        );
        report.push(
            "composition.((1,0),(0,1))-notin-Eq(p1)oEq(p2)",
            p1_after_p2 == Ok(false),
            vec![],
        );
        match scan_permutability(&r) {
            Ok(scan) => {
                report.push("R.not-congruence-permutable", !scan.permutable(), vec![]);
                let w = scan
                    .at_one_violation
                    .map(|(a, b, x)| json!([a.labels(), b.labels(), x]));
                report.push("R.permutable-at-one", w.is_none(), w.into_iter().collect());
            }
            Err(e) => report.push(
                "R.not-congruence-permutable",
                false,
                vec![json!(e.to_string())],
            ),
        }
    }

    // exhaustive universes
    let law_check =
        |report: &mut VerdictReport, name: String, r: crate::Result<Vec<LawFailure>>| match r {
            Ok(f) => report.push_failures(name, f),
            Err(e) => report.push(name, false, vec![json!(e.to_string())]),
        };
    let mut l_algebras = Vec::new();
    for n in 1..=config.max_order {
        let pre = enumerate(n, Kind::PreL).map_err(SetupError::Config)?;
        let l: Vec<_> = enumerate(n, Kind::L).map_err(SetupError::Config)?;
        law_check(
            &mut report,
            format!("galois.pre-l.order-{n} ({} algebras)", pre.len()),
            collect_failures(&pre, laws::galois_failures),
        );
        law_check(
            &mut report,
            format!("category.pre-l.order-{n} ({} algebras)", pre.len()),
            collect_failures(&pre, laws::category_failures),
        );
        law_check(
            &mut report,
            format!("commutator.l.order-{n} ({} algebras)", l.len()),
            collect_failures(&l, laws::commutator_failures),
        );
        law_check(
            &mut report,
            format!("lattice-spectrum.l.order-{n} ({} algebras)", l.len()),
            collect_failures(&l, laws::lattice_failures),
        );
        l_algebras.extend(l);
    }
    let small: Vec<_> = l_algebras
        .iter()
        .filter(|m| m.size() <= SURJECTION_SEARCH_BOUND)
        .collect();
    let mut failures = Vec::new();
    let mut checked = 0;
    for a in &small {
        for b in &small {
            match laws::cokernel_failures(a, b) {
                Ok((f, k)) => {
                    failures.extend(f);
                    checked += k;
                }
                Err(e) => failures.push(LawFailure {
                    law: "cokernel",
                    detail: e.to_string(),
                }),
            }
        }
    }
    report.push_failures(format!("cokernel.surjections ({checked} maps)"), failures);

    // negative controls
    let m3 = FiniteLattice::m3().distributivity_violation();
    report.push("control.M3-not-distributive", m3.is_some(), vec![]);
    report.push(
        "control.indiscrete-2-point-not-sober",
        !FiniteSpace::indiscrete(2).is_sober(),
        vec![],
    );

    report.timing_ms = start.elapsed().as_millis();
    Ok(report)
}

fn collect_failures(
    algebras: &[crate::MagmaTable],
    law: fn(&crate::MagmaTable) -> crate::Result<Vec<LawFailure>>,
) -> crate::Result<Vec<LawFailure>> {
    let mut out = Vec::new();
    for (k, m) in algebras.iter().enumerate() {
        for mut f in law(m)? {
            f.detail = format!("algebra #{k} {:?}: {}", m.rows(), f.detail);
            out.push(f);
        }
    }
    Ok(out)
}
