//! Whole-semigroup reports: the verdict summary, the per-subcommand
//! outputs, and the `check` suite.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::filters::{enumerate_filters, is_filter, maximal_representation_check, truncate_semilattice};
use crate::group::GroupDescriptor;
use crate::group_image::{extend_homomorphism, folner_bound_holds, Homomorphism, Reversibility};
use crate::hull::{HullElement, InverseHull};
use crate::ideal::{IdealFamily, IndependenceVerdict};
use crate::operator::{
    char_projection, conditional_expectation, hull_matrix, intertwiner_matrix, isometry_matrix,
    verify_relation, HullWindow, RelationKind, RelationReport, RelationSetup, SparseMatrix,
};
use crate::semigroup::{Backend, Semigroup, Window};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    /// `key=value` lines.
    Machine,
}

/// Ordered `(key, value)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AnalysisReport {
    entries: Vec<(String, String)>,
}

impl AnalysisReport {
    fn push(&mut self, key: &str, value: impl ToString) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn render(&self, format: Format) -> String {
        let width = self.entries.iter().map(|(k, _)| k.chars().count() + 1).max().unwrap_or(0);
        self.entries
            .iter()
            .map(|(k, v)| match format {
                Format::Text => format!("{:width$}  {v}\n", format!("{k}:")),
                Format::Machine => format!("{k}={v}\n"),
            })
            .collect()
    }
}

fn rng(bounds: &Bounds) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(bounds.seed)
}

/// Verdicts and sizes for one semigroup.
pub fn analyze(sg: &Semigroup, bounds: &Bounds) -> Result<AnalysisReport> {
    let mut r = AnalysisReport::default();
    let h = InverseHull::new(sg);
    let window = sg.window_of_size(bounds.window);
    r.push("backend", sg.name());
    r.push("generators", sg.generators().iter().join(";"));
    r.push("algebraically_ordered", sg.is_algebraically_ordered());

    let lr = sg.is_left_reversible();
    r.push("left_reversible", if lr.is_yes() { "yes" } else { "no" });
    match &lr {
        Reversibility::No { s, t } => r.push("left_reversible.witness", format!("{s},{t}")),
        Reversibility::Yes => r.push(
            "left_reversible.proof",
            if matches!(sg.backend(), Backend::FiniteTable(_)) { "group" } else { "commutative" },
        ),
    }

    let clifford = sg.clifford_check(crate::hull::clifford_window(sg).max(bounds.window as u64));
    r.push("clifford", clifford.tag());
    match &clifford {
        crate::ideal::CliffordVerdict::Holds(reason) => r.push("clifford.proof", format!("{reason:?}")),
        crate::ideal::CliffordVerdict::Fails { s, t, intersection } => {
            r.push("clifford.witness", format!("{s},{t}"));
            r.push("clifford.intersection", intersection);
        }
        crate::ideal::CliffordVerdict::Inconclusive { window } => r.push("clifford.window", window),
    }

    let family = sg.constructible_closure(bounds.depth);
    r.push("ideals.depth", bounds.depth);
    r.push("ideals.count", family.len());
    let independence = sg.independence_check(&family);
    r.push("independence", if independence.is_independent() { "independent" } else { "fails" });
    match &independence {
        IndependenceVerdict::Fails { parts, target } => {
            r.push("independence.witness", format!("{} = {target}", parts.iter().join(" ∪ ")))
        }
        IndependenceVerdict::Independent => {
            r.push("independence.proof", format!("exhaustive over the depth-{} family", bounds.depth))
        }
    }

    let mut rng = rng(bounds);
    let estar = h.estar_unitary_report(100, &mut rng, &window)?;
    r.push("estar", if estar.zero_present { "strongly E*-unitary" } else { "strongly E*-unitary; E-unitary" });
    r.push("estar.samples", estar.pairs_checked);

    r.push("hull.length", bounds.length);
    r.push("hull.count", h.enumerate_hull(bounds.length).len());

    let lattice = truncate_semilattice(sg, &family)?;
    r.push("filters.count", enumerate_filters(&lattice).len());
    r.push("maximal_representation", maximal_representation_check(sg, &lattice));

    match sg.group_of_s() {
        Ok(g) => {
            r.push("group", &g);
            let images = sg.generators().iter().map(|s| sg.gamma(s).map(|x| x.to_string())).collect::<Result<Vec<_>>>()?;
            r.push("gamma", images.join(";"));
        }
        Err(Error::Unsupported { .. }) => r.push("group", "unsupported (not left reversible)"),
        Err(e) => return Err(e),
    }

    for report in relation_reports(sg, &h, bounds, &family, &mut rng)? {
        r.push(&format!("relations.{}", report.kind), format!("ok {} instances", report.instances.len()));
    }
    Ok(r)
}

fn relation_reports(
    sg: &Semigroup,
    h: &InverseHull,
    bounds: &Bounds,
    family: &IdealFamily,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<RelationReport>> {
    let window = sg.window_of_size(bounds.window);
    let hull_window = HullWindow::generate(h, bounds.length, &window);
    let elements = h.enumerate_hull(bounds.length);
    let setup = RelationSetup {
        hull: h,
        window: &window,
        hull_window: &hull_window,
        family,
        elements: &elements,
        random_words: 20,
    };
    RelationKind::ALL.iter().map(|&k| verify_relation(k, &setup, rng)).collect()
}

/// One canonical rendering per line.
pub fn ideals_output(sg: &Semigroup, bounds: &Bounds, format: Format) -> String {
    let family = sg.constructible_closure(bounds.depth);
    match format {
        Format::Text => family.render(),
        Format::Machine => {
            let mut out = format!("count={}\n", family.len());
            for (i, x) in family.iter().enumerate() {
                writeln!(out, "ideal.{i}={x}").unwrap();
            }
            out
        }
    }
}

/// `grade | domain` per element; with `oracle`, each element is checked
/// against the pointwise action of a word producing it.
pub fn hull_output(sg: &Semigroup, bounds: &Bounds, format: Format, oracle: bool) -> Result<String> {
    let h = InverseHull::new(sg);
    let items = h.enumerate_hull_words(bounds.length);
    let window = sg.window_of_size(bounds.window);
    let mut out = String::new();
    let mut compared = 0;
    for (i, (f, w)) in items.iter().enumerate() {
        if oracle {
            let alg = h.materialize(f, &window);
            let pointwise = h.materialize_word(w, &window);
            if let Some(j) = alg.first_mismatch(&pointwise) {
                return Err(Error::Invariant(format!("{f} from {w} disagrees pointwise at {}", window.get(j))));
            }
            compared += alg.comparable(&pointwise);
        }
        match format {
            Format::Text => writeln!(out, "{f}").unwrap(),
            Format::Machine => writeln!(out, "element.{i}={f}").unwrap(),
        }
    }
    if oracle {
        match format {
            Format::Text => writeln!(out, "# oracle: {} elements, window {}, {compared} points agree", items.len(), window.len()),
            Format::Machine => writeln!(out, "oracle.window={}\noracle.points={compared}", window.len()),
        }
        .unwrap();
    }
    Ok(out)
}

/// One filter per line, as the list of its minimal members.
pub fn filters_output(sg: &Semigroup, bounds: &Bounds, format: Format) -> Result<String> {
    let lattice = truncate_semilattice(sg, &sg.constructible_closure(bounds.depth))?;
    let filters = enumerate_filters(&lattice);
    Ok(match format {
        Format::Text => filters.iter().map(|f| format!("{}\n", f.render(&lattice))).collect(),
        Format::Machine => {
            let mut out = format!("count={}\n", filters.len());
            for (i, f) in filters.iter().enumerate() {
                writeln!(out, "filter.{i}={}", f.render(&lattice)).unwrap();
            }
            writeln!(out, "maximal_representation={}", maximal_representation_check(sg, &lattice)).unwrap();
            out
        }
    })
}

/// `G(S)`, the images of the generators, and Følner means of the depth-2
/// family at `N = 10, 100, 1000`.
pub fn group_output(sg: &Semigroup, format: Format) -> Result<String> {
    let mut r = AnalysisReport::default();
    let g = sg.group_of_s()?;
    r.push("group", &g);
    for s in sg.generators() {
        r.push(&format!("gamma({s})"), sg.gamma(s)?);
    }
    if matches!(sg.backend(), Backend::PositiveCone(_) | Backend::Numerical(_)) {
        for x in sg.constructible_closure(2).iter().filter(|x| !x.is_empty()) {
            let c = sg.folner_constant(x)?.expect("nonempty ideal");
            let means = [10, 100, 1000]
                .iter()
                .map(|&n| sg.folner_mean(x, n).map(|m| format!("N={n}:{m}")))
                .collect::<Result<Vec<_>>>()?;
            r.push(&format!("folner({x})"), format!("c={c} {}", means.join(" ")));
        }
    } else {
        r.push("folner", "unsupported for this backend");
    }
    Ok(r.render(format))
}

/// Named matrices written by the `matrix` subcommand, in a fixed order.
pub fn matrix_exports(sg: &Semigroup, bounds: &Bounds) -> Result<Vec<(String, String, SparseMatrix)>> {
    let h = InverseHull::new(sg);
    let window = sg.window_of_size(bounds.window);
    let hull_window = HullWindow::generate(&h, bounds.length, &window);
    let mut out = Vec::new();
    for (i, s) in sg.generators().iter().enumerate() {
        out.push((format!("isometry_{i}"), format!("V_{s}"), isometry_matrix(sg, s, &window)?.matrix().clone()));
    }
    for (i, x) in sg.constructible_closure(bounds.depth).iter().enumerate() {
        out.push((format!("projection_{i}"), format!("χ_{x}"), char_projection(sg, x, &window)?.matrix().clone()));
    }
    for (i, f) in h.enumerate_hull(bounds.length).iter().enumerate() {
        let omega = hull_matrix(&h, f, &window);
        out.push((format!("omega_{i}"), format!("ω({f})"), omega.matrix().clone()));
        out.push((format!("expectation_{i}"), format!("E(ω({f}))"), conditional_expectation(&omega)?.matrix().clone()));
    }
    out.push(("intertwiner".into(), "T".into(), intertwiner_matrix(&h, &window, &hull_window)?.matrix().clone()));
    Ok(out)
}

/// The relation report printed by the `matrix` subcommand.
pub fn relations_output(sg: &Semigroup, bounds: &Bounds, format: Format) -> Result<String> {
    let h = InverseHull::new(sg);
    let family = sg.constructible_closure(bounds.depth);
    let mut rng = rng(bounds);
    let mut r = AnalysisReport::default();
    r.push("window", sg.window_of_size(bounds.window).len());
    for report in relation_reports(sg, &h, bounds, &family, &mut rng)? {
        r.push(
            &format!("relation.{}", report.kind),
            format!("{} instances, {} core columns, 0 mismatches", report.instances.len(), report.columns()),
        );
    }
    Ok(r.render(format))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass(String),
    Fail(String),
    Skip(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub backend: String,
    pub results: Vec<(&'static str, Outcome)>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        !self.results.iter().any(|(_, o)| matches!(o, Outcome::Fail(_)))
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Text => writeln!(out, "check {}", self.backend).unwrap(),
            Format::Machine => writeln!(out, "backend={}", self.backend).unwrap(),
        }
        for (name, o) in &self.results {
            let (tag, detail) = match o {
                Outcome::Pass(d) => ("PASS", d),
                Outcome::Fail(d) => ("FAIL", d),
                Outcome::Skip(d) => ("SKIP", d),
            };
            match format {
                Format::Text => writeln!(out, "{tag} {name}: {detail}").unwrap(),
                Format::Machine => writeln!(out, "{name}={} {detail}", tag.to_lowercase()).unwrap(),
            }
        }
        let fails = self.results.iter().filter(|(_, o)| matches!(o, Outcome::Fail(_))).count();
        match format {
            Format::Text => writeln!(out, "{} checks, {fails} failed", self.results.len()).unwrap(),
            Format::Machine => writeln!(out, "failed={fails}").unwrap(),
        }
        out
    }
}

fn outcome(r: Result<String>) -> Outcome {
    match r {
        Ok(d) => Outcome::Pass(d),
        Err(Error::Unsupported { reason, .. }) => Outcome::Skip(reason),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn fail(msg: String) -> Error {
    Error::Invariant(msg)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(msg()))
    }
}

/// Runs every property suite. The report depends only on `(sg, bounds)`.
pub fn run_check(sg: &Semigroup, bounds: &Bounds) -> CheckReport {
    let h = InverseHull::new(sg);
    let window = sg.window_of_size(bounds.window);
    let family = sg.constructible_closure(bounds.depth);
    let mut rng = rng(bounds);
    let mut results: Vec<(&'static str, Outcome)> = Vec::new();
    let mut run = |name: &'static str, f: &mut dyn FnMut(&mut ChaCha8Rng) -> Result<String>| {
        results.push((name, outcome(f(&mut rng))));
    };

    run("semigroup.axioms", &mut |_| check_semigroup(sg, &window));
    run("ideals.oracle", &mut |_| check_ideals(sg, &window, &family));
    run("hull.oracle", &mut |rng| check_hull_oracle(&h, &window, rng));
    run("hull.axioms", &mut |rng| check_hull_axioms(&h, rng));
    run("hull.star_lambda", &mut |rng| check_star_lambda(&h, &window, rng));
    run("hull.grading", &mut |_| check_grading(&h, bounds.length));
    run("hull.zero", &mut |_| check_zero(&h, bounds.length));
    run("hull.estar", &mut |rng| {
        h.estar_unitary_report(100, rng, &window).map(|r| r.to_string())
    });
    run("hull.lift", &mut |rng| check_lift(&h, &window, rng));
    run("hull.normal_form", &mut |rng| check_normal_form(&h, &window, rng));
    run("filters", &mut |_| check_filters(sg, &family));
    run("group", &mut |rng| check_group(sg, rng));
    run("folner", &mut |_| check_folner(sg, &family));
    run("relations", &mut |rng| {
        relation_reports(sg, &h, bounds, &family, rng).map(|rs| rs.iter().join("; "))
    });
    CheckReport { backend: sg.name(), results }
}

fn check_semigroup(sg: &Semigroup, window: &Window) -> Result<String> {
    let small: Vec<_> = window.iter().take(15).collect();
    for (a, b, c) in small.iter().cartesian_product(&small).cartesian_product(&small).map(|((a, b), c)| (a, b, c)) {
        ensure(sg.mul(&sg.mul(a, b), c) == sg.mul(a, &sg.mul(b, c)), || format!("({a}{b}){c} ≠ {a}({b}{c})"))?;
    }
    let group = sg.grading_group();
    let mut images = BTreeSet::new();
    for s in window.iter() {
        ensure(images.insert(sg.emb(s)), || format!("embedding not injective at {s}"))?;
        for t in window.iter() {
            let st = sg.mul(s, t);
            ensure(sg.ldiv(s, &st).as_ref() == Some(t), || format!("{s} \\ {st} is not {t}"))?;
            if let Some(r) = sg.ldiv(s, t) {
                ensure(sg.mul(s, &r) == *t, || format!("{s} · ({s} \\ {t}) ≠ {t}"))?;
            }
            ensure(sg.emb(&st) == group.mul(&sg.emb(s), &sg.emb(t)), || format!("embedding not multiplicative at {s}, {t}"))?;
        }
    }
    let antisymmetric = window.iter().cartesian_product(window.iter()).all(|(s, t)| {
        s == t || !(sg.ldiv(s, t).is_some() && sg.ldiv(t, s).is_some())
    });
    ensure(antisymmetric == sg.is_algebraically_ordered(), || {
        format!("preorder antisymmetric on the window: {antisymmetric}")
    })?;
    Ok(format!("{} elements, {} triples", window.len(), small.len().pow(3)))
}

fn check_ideals(sg: &Semigroup, window: &Window, family: &IdealFamily) -> Result<String> {
    let pool: Vec<_> = window.iter().take(6).collect();
    let mut points = 0;
    for x in family.iter() {
        for s in &pool {
            let sx = sg.translate(s, x)?;
            let pre = sg.preimage(s, x)?;
            for y in window.iter() {
                let brute = sg.ldiv(s, y).is_some_and(|z| sg.member(&z, x));
                ensure(sg.member(y, &sx) == brute, || format!("{y} ∈ {s}{x}"))?;
                ensure(sg.member(y, &pre) == sg.member(&sg.mul(s, y), x), || format!("{y} ∈ {s}⁻¹{x}"))?;
                points += 2;
            }
        }
        for y in family.iter() {
            let m = sg.intersect(x, y)?;
            ensure(family.contains(&m), || format!("{x} ∩ {y} = {m} escapes the family"))?;
        }
    }
    Ok(format!("{} ideals, {points} memberships", family.len()))
}

fn check_hull_oracle(h: &InverseHull, window: &Window, rng: &mut ChaCha8Rng) -> Result<String> {
    let pool = h.letter_pool();
    let mut compared = 0;
    for _ in 0..200 {
        let w = h.random_word(rng, &pool, 6);
        let f = h.evaluate_word(&w)?;
        let alg = h.materialize(&f, window);
        let pointwise = h.materialize_word(&w, window);
        if let Some(i) = alg.first_mismatch(&pointwise) {
            return Err(fail(format!("{w} = {f} disagrees pointwise at {}", window.get(i))));
        }
        compared += alg.comparable(&pointwise);
    }
    Ok(format!("200 words, {compared} points"))
}

fn sample_elements(h: &InverseHull, rng: &mut ChaCha8Rng, n: usize) -> Vec<HullElement> {
    let pool = h.letter_pool();
    (0..n).map(|_| h.eval(&h.random_word(rng, &pool, 3))).collect()
}

fn check_hull_axioms(h: &InverseHull, rng: &mut ChaCha8Rng) -> Result<String> {
    let fs = sample_elements(h, rng, 100);
    for f in &fs {
        let fs_ = h.star(f);
        ensure(h.star(&fs_) == *f, || format!("f** ≠ f for {f}"))?;
        ensure(h.comp(f, &h.comp(&fs_, f)) == *f, || format!("ff*f ≠ f for {f}"))?;
        ensure(h.is_idempotent(&h.comp(f, &fs_)), || format!("ff* not idempotent for {f}"))?;
    }
    for (f, g) in fs.iter().tuple_windows() {
        let e1 = h.comp(f, &h.star(f));
        let e2 = h.comp(g, &h.star(g));
        ensure(h.comp(&e1, &e2) == h.comp(&e2, &e1), || format!("{e1} and {e2} do not commute"))?;
    }
    for (a, b, c) in fs.iter().tuples() {
        ensure(h.comp(&h.comp(a, b), c) == h.comp(a, &h.comp(b, c)), || format!("composition not associative at {a}, {b}, {c}"))?;
    }
    Ok(format!("{} elements", fs.len()))
}

fn check_star_lambda(h: &InverseHull, window: &Window, rng: &mut ChaCha8Rng) -> Result<String> {
    let n = window.len().min(12);
    for _ in 0..200 {
        let s = window.get(rng.gen_range(0..n));
        let t = if rng.gen_bool(0.3) { s } else { window.get(rng.gen_range(0..n)) };
        let f = h.comp(&h.star(&h.lam(t)), &h.lam(s));
        ensure((f == h.identity()) == (s == t), || format!("λ_{t}* λ_{s} = {f}"))?;
    }
    Ok("200 pairs".into())
}

fn check_grading(h: &InverseHull, length: usize) -> Result<String> {
    let els = h.enumerate_hull(length);
    let one = h.grading_group().identity();
    for f in els.iter().filter(|f| !f.is_zero()) {
        ensure((h.grading(f)? == one) == h.is_idempotent(f), || format!("grading not idempotent pure at {f}"))?;
    }
    Ok(format!("{} elements", els.len()))
}

fn check_zero(h: &InverseHull, length: usize) -> Result<String> {
    let length = length.max(2);
    let has_zero = h.enumerate_hull(length).contains(&HullElement::Zero);
    let lr = h.semigroup().is_left_reversible();
    ensure(has_zero != lr.is_yes(), || format!("zero present: {has_zero}, left reversible: {lr}"))?;
    Ok(format!("zero present: {has_zero}, left reversible: {lr}"))
}

fn check_lift(h: &InverseHull, window: &Window, rng: &mut ChaCha8Rng) -> Result<String> {
    let mut checked = 0;
    for f in sample_elements(h, rng, 300).iter().filter(|f| !f.is_zero()) {
        let candidates: Vec<_> = window.iter().filter(|s| h.semigroup().member(s, f.domain())).collect();
        if candidates.is_empty() {
            continue;
        }
        let s = candidates[rng.gen_range(0..candidates.len())];
        ensure(h.check_lift_relation(f, s, window)?, || format!("f λ_s ≠ λ_f(s) for f = {f}, s = {s}"))?;
        checked += 1;
    }
    Ok(format!("{checked} pairs"))
}

fn check_normal_form(h: &InverseHull, window: &Window, rng: &mut ChaCha8Rng) -> Result<String> {
    let mut n = 0;
    for f in sample_elements(h, rng, 100).iter().filter(|f| !f.is_zero()) {
        h.clifford_normal_form(f, window)?;
        n += 1;
    }
    Ok(format!("{n} elements"))
}

fn check_filters(sg: &Semigroup, family: &IdealFamily) -> Result<String> {
    let lattice = truncate_semilattice(sg, family)?;
    let filters = enumerate_filters(&lattice);
    for f in &filters {
        ensure(is_filter(f.members(), &lattice), || format!("{} is not a filter", f.render(&lattice)))?;
    }
    let rep = maximal_representation_check(sg, &lattice);
    let ind = sg.independence_check(family);
    ensure(rep.is_maximal() == ind.is_independent(), || format!("representation {rep} but independence {ind}"))?;
    Ok(format!("{} filters, representation {}", filters.len(), if rep.is_maximal() { "maximal" } else { "not maximal" }))
}

fn check_group(sg: &Semigroup, rng: &mut ChaCha8Rng) -> Result<String> {
    let g = sg.group_of_s()?;
    let big = sg.window_of_size(200);
    let mut seen = BTreeSet::new();
    for s in big.iter() {
        ensure(seen.insert(sg.gamma(s)?), || format!("γ not injective at {s}"))?;
    }
    let gens = sg.defining_generators().expect("left reversible backends have generators");
    let images = gens.iter().map(|s| sg.gamma(s)).collect::<Result<Vec<_>>>()?;
    let target = match &g {
        GroupDescriptor::IntegerLattice(_) => GroupDescriptor::IntegerLattice(1),
        other => other.clone(),
    };
    let phi = Homomorphism::new(sg, target, images)?;
    let ext = extend_homomorphism(&phi)?;
    if let Some(s) = ext.check_on_window(&big) {
        return Err(fail(format!("φ'(γ({s})) ≠ φ({s})")));
    }
    let pairs = ext.verify_well_defined(100, &sg.window_of_size(40), rng)?;
    Ok(format!("G(S) = {g}, γ injective on {} elements, {pairs} representative pairs", big.len()))
}

fn check_folner(sg: &Semigroup, family: &IdealFamily) -> Result<String> {
    let mut n = 0;
    for x in family.iter().filter(|x| !x.is_empty()) {
        let c = sg.folner_constant(x)?.expect("nonempty");
        for size in [10, 100, 1000] {
            let mean = sg.folner_mean(x, size)?;
            ensure(folner_bound_holds(&mean, c, size), || format!("mean of {x} at {size} is {mean} < 1 - {c}/{size}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} means"))
}
