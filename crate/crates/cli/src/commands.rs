use std::fmt;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use lalg_core::category::{one_regularity_violation, subtractive_violations};
use lalg_core::dot::{congruence_lattice_dot, ideal_lattice_dot, spectrum_dot};
use lalg_core::enumerate::{cross_checked_count, enumerate_with_stats};
use lalg_core::laws::{self, LawFailure};
use lalg_core::suite::{resolve_max_order, run_paper_suite, FixtureSource, SuiteConfig};
use lalg_core::{
    all_congruences, all_ideals, check_axioms, check_cokernel_factorization, check_one_regularity,
    congruence_lattice, ideal_closure, ideal_lattice, is_l, phi, psi, scan_permutability,
    smallest_l_congruence, AlgebraDocument, Axiom, BitSet, Diagnostic, Kind, MagmaTable, Partition,
    Quotient, VerdictReport,
};
use serde_json::{json, Value};

use crate::render;

#[derive(Debug)]
pub enum CliError {
    Io(PathBuf, std::io::Error),
    Parse(String, Diagnostic),
    Input(String),
    Algebra(lalg_core::Error),
    Setup(lalg_core::suite::SetupError),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Parse(src, d) => write!(f, "{src}: {d}"),
            CliError::Input(msg) => f.write_str(msg),
            CliError::Algebra(e) => write!(f, "{e}"),
            CliError::Setup(e) => write!(f, "setup: {e}"),
        }
    }
}

impl From<lalg_core::Error> for CliError {
    fn from(e: lalg_core::Error) -> Self {
        CliError::Algebra(e)
    }
}

/// What a command prints. `verdict` is `Some(false)` when a reported check
/// failed, which turns into exit status 1.
pub enum Output {
    Json {
        value: Value,
        pretty: String,
        verdict: Option<bool>,
    },
    Dot(String),
}

impl Output {
    fn data(value: Value, pretty: String) -> Self {
        Output::Json {
            value,
            pretty,
            verdict: None,
        }
    }

    fn report(report: &VerdictReport, extra: Option<(&str, Value)>) -> Self {
        let mut value = serde_json::to_value(report).expect("report serializes");
        let mut pretty = render::report(report);
        if let Some((key, v)) = extra {
            pretty.push_str(&format!("{key}: {}\n", render::inline(&v)));
            value[key] = v;
        }
        Output::Json {
            value,
            pretty,
            verdict: Some(report.all_passed()),
        }
    }

    pub fn emit(self, pretty: bool) -> ExitCode {
        match self {
            Output::Dot(text) => {
                write_stdout(&text);
                ExitCode::SUCCESS
            }
            Output::Json {
                value,
                pretty: text,
                verdict,
            } => {
                if pretty {
                    write_stdout(&text);
                } else {
                    let line = serde_json::to_string(&value).expect("value serializes");
                    write_stdout(&(line + "\n"));
                }
                if verdict == Some(false) {
                    ExitCode::from(1)
                } else {
                    ExitCode::SUCCESS
                }
            }
        }
    }
}

/// A closed pipe downstream is not an error worth reporting.
fn write_stdout(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

pub struct Loaded {
    pub doc: AlgebraDocument,
    pub table: MagmaTable,
    pub label: String,
}

impl Loaded {
    fn names(&self) -> Option<&[String]> {
        self.doc.names.as_deref()
    }

    fn set(&self, s: BitSet) -> Vec<String> {
        s.iter().map(|i| self.doc.name(i)).collect()
    }

    fn classes(&self, p: &Partition) -> Vec<Vec<String>> {
        p.classes().into_iter().map(|c| self.set(c)).collect()
    }

    /// Parses `x,1`, `{x, 1}` or `0 3`; names take precedence over indices.
    fn parse_set(&self, text: &str) -> Result<BitSet, CliError> {
        let mut out = BitSet::EMPTY;
        let trimmed = text.trim().trim_start_matches('{').trim_end_matches('}');
        for token in trimmed.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let by_name = self
                .doc
                .names
                .as_ref()
                .and_then(|names| names.iter().position(|n| n == token));
            let index = match by_name {
                Some(i) => i,
                None => token
                    .parse::<usize>()
                    .ok()
                    .filter(|&i| i < self.table.size())
                    .ok_or_else(|| CliError::Input(format!("unknown element {token:?}")))?,
            };
            out.insert(index);
        }
        Ok(out)
    }

    fn parse_labels(&self, text: &str) -> Result<Partition, CliError> {
        let labels = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| CliError::Input(format!("bad class label {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if labels.len() != self.table.size() {
            return Err(CliError::Input(format!(
                "{} labels for {} elements",
                labels.len(),
                self.table.size()
            )));
        }
        Ok(Partition::from_labels(&labels))
    }
}

pub fn load(path: &Path) -> Result<Loaded, CliError> {
    let (bytes, label) = if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| CliError::Io(path.to_path_buf(), e))?;
        (buf, "<stdin>".to_string())
    } else {
        let bytes = std::fs::read(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
        (bytes, path.display().to_string())
    };
    let doc = lalg_core::parse_document(&bytes).map_err(|d| CliError::Parse(label.clone(), d))?;
    let table = doc
        .to_table()
        .map_err(|d| CliError::Parse(label.clone(), d))?;
    let label = doc.source.clone().unwrap_or(label);
    Ok(Loaded { doc, table, label })
}

fn classification(m: &MagmaTable) -> &'static str {
    let r = check_axioms(m);
    if r.is_l() {
        "l"
    } else if r.is_pre_l() {
        "pre-l"
    } else {
        "none"
    }
}

pub fn check(a: &Loaded, kind: Option<Kind>) -> Result<Output, CliError> {
    let start = Instant::now();
    let kind = kind.or(a.doc.kind).unwrap_or(Kind::L);
    let axioms = check_axioms(&a.table);
    let mut report = VerdictReport::new("check", &a.label);
    let mut laws = vec![
        (Axiom::Unital, axioms.unital),
        (Axiom::Cycloid, axioms.cycloid),
    ];
    if kind == Kind::L {
        laws.push((Axiom::Antisymmetric, axioms.antisymmetric));
    }
    for (axiom, holds) in laws {
        let witnesses = axioms
            .witnesses(axiom)
            .map(|w| json!(w.iter().map(|&i| a.doc.name(i)).collect::<Vec<_>>()))
            .collect();
        report.push(axiom.name(), holds, witnesses);
    }
    report.timing_ms = start.elapsed().as_millis();
    Ok(Output::report(
        &report,
        Some(("classification", json!(classification(&a.table)))),
    ))
}

pub fn ideals(a: &Loaded, closure: Option<&str>) -> Result<Output, CliError> {
    let all = all_ideals(&a.table)?;
    let listed: Vec<Vec<String>> = all.iter().map(|&i| a.set(i)).collect();
    let mut value = json!({"algebra": a.label, "count": all.len(), "ideals": listed});
    let mut pretty = format!("{} ideals of {}\n", all.len(), a.label);
    for &i in &all {
        pretty.push_str(&format!("  {}\n", render::set(i, a.names())));
    }
    if let Some(text) = closure {
        let gens = a.parse_set(text)?;
        let c = ideal_closure(&a.table, gens)?;
        value["closure"] = json!({"generators": a.set(gens), "ideal": a.set(c)});
        pretty.push_str(&format!(
            "ideal generated by {}: {}\n",
            render::set(gens, a.names()),
            render::set(c, a.names())
        ));
    }
    Ok(Output::data(value, pretty))
}

pub fn congruences(a: &Loaded) -> Result<Output, CliError> {
    let all = all_congruences(&a.table)?;
    let pre_l = check_axioms(&a.table).is_pre_l();
    let mut rows = Vec::new();
    let mut pretty = format!("{} congruences of {}\n", all.len(), a.label);
    for c in &all {
        let q = lalg_core::quotient(&a.table, c)?;
        let mut row = json!({
            "labels": c.labels(),
            "classes": a.classes(c),
            "l_quotient": is_l(&q.algebra),
        });
        let mut line = format!("  {}", render::partition(c, a.names()));
        if pre_l {
            let unit_class = phi(&a.table, c)?;
            row["phi"] = json!(a.set(unit_class));
            line.push_str(&format!("  φ = {}", render::set(unit_class, a.names())));
        }
        if is_l(&q.algebra) {
            line.push_str("  (L-algebra quotient)");
        }
        pretty.push_str(&line);
        pretty.push('\n');
        rows.push(row);
    }
    let value = json!({"algebra": a.label, "count": all.len(), "congruences": rows});
    Ok(Output::data(value, pretty))
}

fn quotient_output(a: &Loaded, c: &Partition, q: &Quotient, how: String) -> Output {
    let names: Vec<String> = c
        .classes()
        .into_iter()
        .map(|cl| render::set(cl, a.names()))
        .collect();
    let doc = AlgebraDocument::from_table(&q.algebra)
        .with_names(Some(names.clone()))
        .with_source(format!("{} / {how}", a.label));
    let mut value = serde_json::to_value(&doc).expect("document serializes");
    value["projection"] = json!(q.projection.images());
    let mut pretty = format!("{} / {how}\n", a.label);
    pretty.push_str(&render::cayley(&q.algebra, Some(&names)));
    pretty.push_str("projection:\n");
    for x in a.table.elements() {
        pretty.push_str(&format!(
            "  {} ↦ {}\n",
            a.doc.name(x),
            names[q.projection.apply(x)]
        ));
    }
    Output::data(value, pretty)
}

pub fn quotient(
    a: &Loaded,
    ideal: Option<&str>,
    congruence: Option<&str>,
) -> Result<Output, CliError> {
    let (c, how) = match (ideal, congruence) {
        (Some(text), _) => {
            let i = a.parse_set(text)?;
            (
                psi(&a.table, i)?,
                format!("ψ({})", render::set(i, a.names())),
            )
        }
        (None, Some(text)) => {
            let c = a.parse_labels(text)?;
            let how = render::partition(&c, a.names());
            (c, how)
        }
        (None, None) => return Err(CliError::Input("give --ideal or --congruence".into())),
    };
    let q = lalg_core::quotient(&a.table, &c)?;
    Ok(quotient_output(a, &c, &q, how))
}

pub fn reflect(a: &Loaded) -> Result<Output, CliError> {
    let q = lalg_core::reflect(&a.table)?;
    let c = q.projection.kernel_partition();
    Ok(quotient_output(a, &c, &q, "reflection".into()))
}

/// One check per law name, each carrying the failures recorded for it.
fn law_report(
    command: &str,
    label: &str,
    names: &[&str],
    failures: Vec<LawFailure>,
) -> VerdictReport {
    let mut report = VerdictReport::new(command, label);
    for &name in names {
        let mine = failures.iter().filter(|f| f.law == name).cloned().collect();
        report.push_failures(name, mine);
    }
    report
}

pub fn galois(a: &Loaded) -> Result<Output, CliError> {
    let start = Instant::now();
    let failures = laws::galois_failures(&a.table)?;
    let mut report = law_report(
        "galois",
        &a.label,
        &[
            "adjunction",
            "phi-psi-identity",
            "closure-extensive",
            "closure-idempotent",
            "closure-monotone",
            "image-characterization",
            "minimality",
            "ideal-congruence-bijection",
        ],
        failures,
    );
    let mut closures = Vec::new();
    for c in all_congruences(&a.table)? {
        let l = smallest_l_congruence(&a.table, &c)?;
        closures.push(json!({
            "congruence": a.classes(&c),
            "phi": a.set(phi(&a.table, &c)?),
            "psi_phi": a.classes(&l),
        }));
    }
    report.timing_ms = start.elapsed().as_millis();
    Ok(Output::report(&report, Some(("closures", json!(closures)))))
}

pub fn lattice(a: &Loaded, ideals: bool, dot: bool) -> Result<Output, CliError> {
    if ideals {
        let l = ideal_lattice(&a.table)?;
        if dot {
            return Ok(Output::Dot(ideal_lattice_dot(&l, a.names())));
        }
        let labels = l.elements().iter().map(|&i| json!(a.set(i))).collect();
        let text = l
            .elements()
            .iter()
            .map(|&i| render::set(i, a.names()))
            .collect();
        Ok(lattice_output(a, "ideals", &l, labels, text))
    } else {
        let l = congruence_lattice(&a.table)?;
        if dot {
            return Ok(Output::Dot(congruence_lattice_dot(&l, a.names())));
        }
        let labels = l.elements().iter().map(|c| json!(a.classes(c))).collect();
        let text = l
            .elements()
            .iter()
            .map(|c| render::partition(c, a.names()))
            .collect();
        Ok(lattice_output(a, "congruences", &l, labels, text))
    }
}

fn lattice_output<T>(
    a: &Loaded,
    what: &str,
    l: &lalg_core::FiniteLattice<T>,
    labels: Vec<Value>,
    text: Vec<String>,
) -> Output {
    let covers = l.cover_pairs();
    let irreducible = l.meet_irreducibles();
    let value = json!({
        "algebra": a.label,
        "lattice": what,
        "elements": labels,
        "covers": covers,
        "bottom": l.bottom(),
        "top": l.top(),
        "distributive": l.is_distributive(),
        "meet_irreducible": irreducible,
    });
    let mut pretty = format!("lattice of {what} of {} ({} elements)\n", a.label, l.len());
    for (k, t) in text.iter().enumerate() {
        let mark = if irreducible.contains(&k) {
            "  meet-irreducible"
        } else {
            ""
        };
        pretty.push_str(&format!("  {k}: {t}{mark}\n"));
    }
    pretty.push_str("covers:\n");
    for (i, j) in covers {
        pretty.push_str(&format!("  {i} ⋖ {j}\n"));
    }
    pretty.push_str(&format!("distributive: {}\n", l.is_distributive()));
    Output::data(value, pretty)
}

pub fn commutator(a: &Loaded, i: &str, j: &str) -> Result<Output, CliError> {
    let (i, j) = (a.parse_set(i)?, a.parse_set(j)?);
    let c = lalg_core::commutator(&a.table, i, j)?;
    let value = json!({
        "algebra": a.label,
        "i": a.set(i),
        "j": a.set(j),
        "commutator": a.set(c),
        "intersection": a.set(i & j),
        "equals_intersection": c == i & j,
    });
    let pretty = format!(
        "[{}, {}] = {}\nI ∩ J = {}\n",
        render::set(i, a.names()),
        render::set(j, a.names()),
        render::set(c, a.names()),
        render::set(i & j, a.names())
    );
    Ok(Output::data(value, pretty))
}

pub fn spectrum(a: &Loaded, dot: bool) -> Result<Output, CliError> {
    let s = lalg_core::spectrum(&a.table)?;
    if dot {
        return Ok(Output::Dot(spectrum_dot(&s, a.names())));
    }
    let points: Vec<Vec<String>> = s.points.iter().map(|&p| a.set(p)).collect();
    let opens: Vec<Vec<usize>> = s.space.opens().iter().map(|o| o.to_vec()).collect();
    let by_ideal: Vec<Value> = s
        .ideals
        .iter()
        .zip(&s.open_of_ideal)
        .map(|(&i, &k)| json!({"ideal": a.set(i), "open": s.space.opens()[k].to_vec()}))
        .collect();
    let value = json!({
        "algebra": a.label,
        "points": points,
        "opens": opens,
        "open_of_ideal": by_ideal,
        "lattice_isomorphism": s.isomorphism_violation.is_none(),
        "isomorphism_violation": s.isomorphism_violation,
        "sober": s.is_sober(),
    });
    let mut pretty = format!("Spec of {} ({} points)\n", a.label, s.points.len());
    for (k, &p) in s.points.iter().enumerate() {
        pretty.push_str(&format!("  p{k} = {}\n", render::set(p, a.names())));
    }
    pretty.push_str("opens U_I:\n");
    for (&i, &k) in s.ideals.iter().zip(&s.open_of_ideal) {
        let pts: Vec<String> = s.space.opens()[k].iter().map(|p| format!("p{p}")).collect();
        pretty.push_str(&format!(
            "  {} ↦ {{{}}}\n",
            render::set(i, a.names()),
            pts.join(", ")
        ));
    }
    pretty.push_str(&format!(
        "opens ≅ ideals: {}\nsober: {}\n",
        s.isomorphism_violation.is_none(),
        s.is_sober()
    ));
    Ok(Output::data(value, pretty))
}

pub struct CatSelection {
    pub permutability: bool,
    pub at_one: bool,
    /// Requested explicitly: a non-L input is an error.
    pub cokernel: bool,
    /// Part of the default set: skipped for non-L input.
    pub cokernel_if_l: bool,
    pub terms: bool,
}

pub fn cat_check(a: &Loaded, sel: CatSelection) -> Result<Output, CliError> {
    let start = Instant::now();
    let m = &a.table;
    let mut report = VerdictReport::new("cat-check", &a.label);
    if sel.terms {
        let w: Vec<Value> = subtractive_violations(m)
            .into_iter()
            .map(|(law, x)| json!({"law": law, "x": a.doc.name(x)}))
            .collect();
        report.push("subtractive-terms", w.is_empty(), w);
        let regular = check_one_regularity(m);
        let w: Vec<Value> = one_regularity_violation(m)
            .map(|(x, y)| json!([a.doc.name(x), a.doc.name(y)]))
            .into_iter()
            .collect();
        report.push(
            "one-regularity-iff-l",
            regular == is_l(m),
            if regular == is_l(m) { vec![] } else { w },
        );
    }
    if sel.permutability || sel.at_one {
        let scan = scan_permutability(m)?;
        if sel.permutability {
            let w = scan
                .full_violation
                .as_ref()
                .map(|(r, s)| json!({"r": a.classes(r), "s": a.classes(s)}));
            report.push(
                "congruence-permutable",
                w.is_none(),
                w.into_iter().collect(),
            );
        }
        if sel.at_one {
            if !check_axioms(m).is_pre_l() {
                return Err(CliError::Algebra(lalg_core::Error::NotPreL(
                    "permutability at 1",
                )));
            }
            let w = scan.at_one_violation.as_ref().map(
                |(r, s, x)| json!({"r": a.classes(r), "s": a.classes(s), "x": a.doc.name(*x)}),
            );
            report.push("permutable-at-one", w.is_none(), w.into_iter().collect());
        }
    }
    if sel.cokernel || (sel.cokernel_if_l && is_l(m)) {
        if !is_l(m) {
            return Err(CliError::Algebra(lalg_core::Error::NotL));
        }
        let mut bad = Vec::new();
        let mut count = 0;
        for c in all_congruences(m)? {
            let q = lalg_core::quotient(m, &c)?;
            if is_l(&q.algebra) {
                count += 1;
                if !check_cokernel_factorization(&q.projection)? {
                    bad.push(json!(a.classes(&c)));
                }
            }
        }
        report.push(
            format!("cokernel ({count} L-quotients)"),
            bad.is_empty(),
            bad,
        );
    }
    report.timing_ms = start.elapsed().as_millis();
    Ok(Output::report(
        &report,
        Some(("classification", json!(classification(m)))),
    ))
}

pub fn enumerate(order: usize, kind: Kind, out: Option<&Path>) -> Result<Output, CliError> {
    let (found, stats) = enumerate_with_stats(order, kind)?;
    let docs: Vec<AlgebraDocument> = found
        .iter()
        .enumerate()
        .map(|(k, m)| {
            AlgebraDocument::from_table(m)
                .with_kind(kind)
                .with_source(format!("enumerate:{}:{order}:{}", kind.name(), k + 1))
        })
        .collect();
    let files: Vec<String> = (1..=docs.len())
        .map(|k| format!("{}-{order}-{k:04}.json", kind.name()))
        .collect();
    let expected = cross_checked_count(order, kind);
    let mut manifest = json!({
        "order": order,
        "kind": kind,
        "classes": stats.classes,
        "labelled_tables": stats.labelled,
        "elapsed_ms": stats.elapsed_ms,
        "cross_check": match expected {
            Some(n) => json!({"independent_count": n, "agrees": n == stats.classes}),
            None => Value::Null,
        },
    });
    let mut pretty = format!(
        "{} {} classes of order {order} ({} labelled tables, {} ms)\n",
        stats.classes,
        kind.name(),
        stats.labelled,
        stats.elapsed_ms
    );
    match expected {
        Some(n) => pretty.push_str(&format!("independent count: {n}\n")),
        None => pretty.push_str("no independent count for this order\n"),
    }
    let value = if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Io(dir.to_path_buf(), e))?;
        for (doc, file) in docs.iter().zip(&files) {
            let path = dir.join(file);
            std::fs::write(&path, doc.to_json_pretty() + "\n")
                .map_err(|e| CliError::Io(path.clone(), e))?;
        }
        manifest["files"] = json!(files);
        let path = dir.join("manifest.json");
        let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n";
        std::fs::write(&path, text).map_err(|e| CliError::Io(path.clone(), e))?;
        pretty.push_str(&format!(
            "wrote {} documents to {}\n",
            docs.len(),
            dir.display()
        ));
        manifest
    } else {
        for (k, m) in found.iter().enumerate() {
            pretty.push_str(&format!("#{}\n", k + 1));
            pretty.push_str(&render::cayley(m, None));
        }
        json!({"manifest": manifest, "algebras": docs})
    };
    Ok(Output::data(value, pretty))
}

pub fn paper_suite(
    max_order: Option<usize>,
    fixtures: Option<PathBuf>,
) -> Result<Output, CliError> {
    let max_order = resolve_max_order(max_order)?;
    let config = SuiteConfig {
        max_order,
        fixtures: fixtures.map_or(FixtureSource::Embedded, FixtureSource::Directory),
    };
    let report = run_paper_suite(&config).map_err(CliError::Setup)?;
    Ok(Output::report(&report, None))
}
