//! Finite compressions of the left regular representations on `ℓ²(S)` and
//! `ℓ²(I_l(S))`, with safe cores on which they agree exactly with the
//! untruncated operators.
//!
//! A column `j` is in the column core when the untruncated operator sends
//! the basis vector `j` into the span of the window, so the stored column
//! is exact. Row cores are column cores of the adjoint.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::io::{self, Write};

use itertools::Itertools;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::hull::{HullElement, HullWord, InverseHull};
use crate::group::Rational;
use crate::ideal::{IdealFamily, RightIdeal};
use crate::semigroup::{Semigroup, SemigroupElement, Window};

/// Exact sparse rational matrix; zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.entries.get(&(i, j)).copied().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!(i < self.rows && j < self.cols, "entry ({i}, {j}) outside {}x{}", self.rows, self.cols);
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, Rational)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    fn column_support(&self) -> Vec<Vec<usize>> {
        let mut cols = vec![Vec::new(); self.cols];
        for &(i, j) in self.entries.keys() {
            cols[j].push(i);
        }
        cols
    }

    fn row_support(&self) -> Vec<Vec<usize>> {
        let mut rows = vec![Vec::new(); self.rows];
        for &(i, j) in self.entries.keys() {
            rows[i].push(j);
        }
        rows
    }

    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::Domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut by_row: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); other.rows];
        for (k, j, v) in other.entries() {
            by_row[k].push((j, v));
        }
        let mut acc: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (i, k, a) in self.entries() {
            for &(j, b) in &by_row[k] {
                *acc.entry((i, j)).or_insert_with(Rational::zero) += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(SparseMatrix { rows: self.rows, cols: other.cols, entries: acc })
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(i, j), &v)| ((j, i), v)).collect(),
        }
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Domain("cannot add matrices of different shapes".into()));
        }
        let mut out = self.clone();
        for (i, j, v) in other.entries() {
            out.set(i, j, out.get(i, j) + v);
        }
        Ok(out)
    }

    pub fn scale(&self, c: Rational) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.rows, self.cols);
        for (i, j, v) in self.entries() {
            out.set(i, j, v * c);
        }
        out
    }

    pub fn diagonal_part(&self) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().filter(|((i, j), _)| i == j).map(|(&k, &v)| (k, v)).collect(),
        }
    }

    pub fn column(&self, j: usize) -> Vec<(usize, Rational)> {
        self.entries.iter().filter(|((_, c), _)| *c == j).map(|(&(i, _), &v)| (i, v)).collect()
    }

    /// `rows cols nnz`, then one `row col value` line per nonzero entry.
    pub fn export<W: Write>(&self, out: &mut W) -> io::Result<()> {
        writeln!(out, "{} {} {}", self.rows, self.cols, self.nnz())?;
        for (i, j, v) in self.entries() {
            writeln!(out, "{i} {j} {v}")?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.export(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii")
    }

    /// Inverse of [`SparseMatrix::to_text`].
    pub fn parse(text: &str) -> Result<SparseMatrix> {
        let bad = |line: usize, msg: &str| Error::Config { line, field: "matrix".into(), message: msg.into() };
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or_else(|| bad(1, "empty matrix file"))?;
        let head: Vec<usize> = header
            .split_whitespace()
            .map(|x| x.parse().map_err(|_| bad(1, "header must be `rows cols nnz`")))
            .collect::<Result<_>>()?;
        let [rows, cols, nnz] = head[..] else { return Err(bad(1, "header must be `rows cols nnz`")) };
        let mut m = SparseMatrix::zeros(rows, cols);
        for (n, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [i, j, v] = parts[..] else { return Err(bad(n + 1, "expected `row col value`")) };
            let i: usize = i.parse().map_err(|_| bad(n + 1, "bad row"))?;
            let j: usize = j.parse().map_err(|_| bad(n + 1, "bad column"))?;
            let v: Rational = v.parse().map_err(|_| bad(n + 1, "bad value"))?;
            if i >= rows || j >= cols {
                return Err(bad(n + 1, "entry out of range"));
            }
            m.set(i, j, v);
        }
        if m.nnz() != nnz {
            return Err(bad(1, "nnz does not match the entries"));
        }
        Ok(m)
    }
}

/// A truncated operator with its exact rows and columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedOperator {
    matrix: SparseMatrix,
    row_core: BTreeSet<usize>,
    col_core: BTreeSet<usize>,
}

impl TruncatedOperator {
    pub fn new(matrix: SparseMatrix, row_core: BTreeSet<usize>, col_core: BTreeSet<usize>) -> Self {
        TruncatedOperator { matrix, row_core, col_core }
    }

    /// An operator known exactly on every row and column.
    pub fn exact(matrix: SparseMatrix) -> Self {
        let row_core = (0..matrix.rows()).collect();
        let col_core = (0..matrix.cols()).collect();
        TruncatedOperator { matrix, row_core, col_core }
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn row_core(&self) -> &BTreeSet<usize> {
        &self.row_core
    }

    pub fn col_core(&self) -> &BTreeSet<usize> {
        &self.col_core
    }

    pub fn adjoint(&self) -> TruncatedOperator {
        TruncatedOperator {
            matrix: self.matrix.transpose(),
            row_core: self.col_core.clone(),
            col_core: self.row_core.clone(),
        }
    }

    /// `self · other`; a column is exact when the column of `other` is exact
    /// and lands on exact columns of `self`.
    pub fn mul(&self, other: &TruncatedOperator) -> Result<TruncatedOperator> {
        let matrix = self.matrix.mul(&other.matrix)?;
        let cols = other.matrix.column_support();
        let col_core = other
            .col_core
            .iter()
            .copied()
            .filter(|&j| cols[j].iter().all(|k| self.col_core.contains(k)))
            .collect();
        let rows = self.matrix.row_support();
        let row_core = self
            .row_core
            .iter()
            .copied()
            .filter(|&i| rows[i].iter().all(|k| other.row_core.contains(k)))
            .collect();
        Ok(TruncatedOperator { matrix, row_core, col_core })
    }

    /// The diagonal part, exact everywhere.
    pub fn conditional_expectation(&self) -> Result<TruncatedOperator> {
        if self.matrix.rows() != self.matrix.cols() {
            return Err(Error::Domain("conditional expectation of a non-square matrix".into()));
        }
        Ok(TruncatedOperator::exact(self.matrix.diagonal_part()))
    }

    /// Columns exact on both sides.
    pub fn joint_core(&self, other: &TruncatedOperator) -> BTreeSet<usize> {
        self.col_core.intersection(&other.col_core).copied().collect()
    }

    /// Compares columns in the joint core; `Ok(n)` with the number compared,
    /// or `Err(j)` for the first differing column.
    pub fn agrees_on_core(&self, other: &TruncatedOperator) -> std::result::Result<usize, usize> {
        let core = self.joint_core(other);
        for &j in &core {
            if self.matrix.column(j) != other.matrix.column(j) {
                return Err(j);
            }
        }
        Ok(core.len())
    }
}

/// `V_s`: `ε_t -> ε_{st}`.
pub fn isometry_matrix(sg: &Semigroup, s: &SemigroupElement, w: &Window) -> Result<TruncatedOperator> {
    sg.check(s)?;
    let n = w.len();
    let mut m = SparseMatrix::zeros(n, n);
    let mut col_core = BTreeSet::new();
    for (j, t) in w.iter().enumerate() {
        if let Some(i) = w.index_of(&sg.mul(s, t)) {
            m.set(i, j, Rational::one());
            col_core.insert(j);
        }
    }
    let row_core = (0..n)
        .filter(|&i| sg.ldiv(s, w.get(i)).is_none_or(|r| w.contains(&r)))
        .collect();
    Ok(TruncatedOperator::new(m, row_core, col_core))
}

/// `χ_X`.
pub fn char_projection(sg: &Semigroup, x: &RightIdeal, w: &Window) -> Result<TruncatedOperator> {
    let mut m = SparseMatrix::zeros(w.len(), w.len());
    for (i, t) in w.iter().enumerate() {
        if sg.membership(t, x)? {
            m.set(i, i, Rational::one());
        }
    }
    Ok(TruncatedOperator::exact(m))
}

/// `ω(f)`: the pointwise action of `f` on `ℓ²(S)`.
pub fn hull_matrix(h: &InverseHull, f: &HullElement, w: &Window) -> TruncatedOperator {
    let n = w.len();
    let mut m = SparseMatrix::zeros(n, n);
    let mut col_core = BTreeSet::new();
    for (j, x) in w.iter().enumerate() {
        match h.apply(f, x) {
            None => {
                col_core.insert(j);
            }
            Some(y) => {
                if let Some(i) = w.index_of(&y) {
                    m.set(i, j, Rational::one());
                    col_core.insert(j);
                }
            }
        }
    }
    let fstar = h.star(f);
    let row_core = (0..n)
        .filter(|&i| h.apply(&fstar, w.get(i)).is_none_or(|x| w.contains(&x)))
        .collect();
    TruncatedOperator::new(m, row_core, col_core)
}

/// An ordered, duplicate-free set of hull elements with an index map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullWindow {
    elements: Vec<HullElement>,
    index: HashMap<HullElement, usize>,
}

impl HullWindow {
    pub fn new(mut elements: Vec<HullElement>) -> Self {
        elements.sort();
        elements.dedup();
        let index = elements.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        HullWindow { elements, index }
    }

    /// The hull elements of words with at most `length` pairs, together
    /// with `λ_s` for every `s` in `w`.
    pub fn generate(h: &InverseHull, length: usize, w: &Window) -> Self {
        let mut els = h.enumerate_hull(length);
        els.extend(w.iter().map(|s| h.lam(s)));
        HullWindow::new(els)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[HullElement] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &HullElement {
        &self.elements[i]
    }

    pub fn index_of(&self, f: &HullElement) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, HullElement> {
        self.elements.iter()
    }
}

/// `Λ(f)`: `δ_q -> δ_{fq}` when `f*fq = q`, else `0`.
pub fn regular_rep_matrix(h: &InverseHull, f: &HullElement, hw: &HullWindow) -> TruncatedOperator {
    let n = hw.len();
    let fstar = h.star(f);
    let act = |g: &HullElement, gstar: &HullElement, q: &HullElement| {
        (h.comp(gstar, &h.comp(g, q)) == *q).then(|| h.comp(g, q))
    };
    let mut m = SparseMatrix::zeros(n, n);
    let mut col_core = BTreeSet::new();
    for (j, q) in hw.iter().enumerate() {
        match act(f, &fstar, q) {
            None => {
                col_core.insert(j);
            }
            Some(p) => {
                if let Some(i) = hw.index_of(&p) {
                    m.set(i, j, Rational::one());
                    col_core.insert(j);
                }
            }
        }
    }
    let row_core = (0..n)
        .filter(|&i| act(&fstar, f, hw.get(i)).is_none_or(|q| hw.index_of(&q).is_some()))
        .collect();
    TruncatedOperator::new(m, row_core, col_core)
}

/// `T`: `ε_s -> δ_{λ_s}`, an `|HW| x |W|` isometry.
pub fn intertwiner_matrix(h: &InverseHull, w: &Window, hw: &HullWindow) -> Result<TruncatedOperator> {
    let mut m = SparseMatrix::zeros(hw.len(), w.len());
    for (j, s) in w.iter().enumerate() {
        let i = hw
            .index_of(&h.lam(s))
            .ok_or_else(|| Error::Precondition(format!("λ_{s} is missing from the hull window")))?;
        m.set(i, j, Rational::one());
    }
    // T* δ_p is ε_s for p = λ_s and 0 for p not of that form
    let sg = h.semigroup();
    let row_core = (0..hw.len())
        .filter(|&i| match hw.get(i) {
            HullElement::Map { grade, domain: RightIdeal::Full } => {
                sg.to_semigroup(grade).is_none_or(|s| w.contains(&s))
            }
            _ => true,
        })
        .collect();
    Ok(TruncatedOperator::new(m, row_core, (0..w.len()).collect()))
}

/// `E`: the diagonal part.
pub fn conditional_expectation(m: &TruncatedOperator) -> Result<TruncatedOperator> {
    m.conditional_expectation()
}

/// The truncated operator of a word, as the product of its `V_t*` and `V_s`.
pub fn word_operator(sg: &Semigroup, word: &HullWord, w: &Window) -> Result<TruncatedOperator> {
    let mut acc = TruncatedOperator::exact(SparseMatrix::identity(w.len()));
    for (t, s) in word.pairs() {
        acc = acc.mul(&isometry_matrix(sg, t, w)?.adjoint())?.mul(&isometry_matrix(sg, s, w)?)?;
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RelationKind {
    /// `V_s χ_X V_s* = χ_{sX}`.
    Covariance,
    /// `χ_X χ_Y = χ_{X∩Y}`.
    Semilattice,
    /// `V_s* V_s = 1`.
    Isometry,
    /// `V_{t1}* V_{s1} ⋯ = χ_X` for words of grade `1`.
    CsGradeOne,
    /// `T* Λ(f) T = ω(f)`.
    Intertwiner,
    /// `E(ω(f)) = ω(f)` exactly for idempotent `f`.
    Expectation,
}

impl RelationKind {
    pub const ALL: [RelationKind; 6] = [
        RelationKind::Covariance,
        RelationKind::Semilattice,
        RelationKind::Isometry,
        RelationKind::CsGradeOne,
        RelationKind::Intertwiner,
        RelationKind::Expectation,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RelationKind::Covariance => "covariance",
            RelationKind::Semilattice => "semilattice",
            RelationKind::Isometry => "isometry",
            RelationKind::CsGradeOne => "cs-grade-one",
            RelationKind::Intertwiner => "intertwiner",
            RelationKind::Expectation => "expectation",
        }
    }

    pub fn parse(s: &str) -> Option<RelationKind> {
        RelationKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// One checked identity and the number of exact columns compared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub label: String,
    pub columns: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub kind: RelationKind,
    pub instances: Vec<Instance>,
}

impl RelationReport {
    pub fn columns(&self) -> usize {
        self.instances.iter().map(|i| i.columns).sum()
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} instances, {} core columns, 0 mismatches",
            self.kind,
            self.instances.len(),
            self.columns()
        )
    }
}

/// Everything a relation check needs.
pub struct RelationSetup<'a> {
    pub hull: &'a InverseHull<'a>,
    pub window: &'a Window,
    pub hull_window: &'a HullWindow,
    pub family: &'a IdealFamily,
    /// Hull elements the intertwiner and expectation checks run over.
    pub elements: &'a [HullElement],
    /// Random words added to the grade-one check.
    pub random_words: usize,
}

/// Evaluates both sides of every instance and compares them on the safe
/// core; the first mismatch is an invariant failure naming the instance.
pub fn verify_relation<R: Rng>(kind: RelationKind, setup: &RelationSetup, rng: &mut R) -> Result<RelationReport> {
    let h = setup.hull;
    let sg = h.semigroup();
    let w = setup.window;
    let pool = h.letter_pool();
    let mut instances = Vec::new();
    let mut check = |label: String, lhs: TruncatedOperator, rhs: TruncatedOperator| -> Result<()> {
        match lhs.agrees_on_core(&rhs) {
            Ok(columns) => {
                instances.push(Instance { label, columns });
                Ok(())
            }
            Err(j) => Err(Error::Invariant(format!("{kind} relation fails for {label} at column {j}"))),
        }
    };
    match kind {
        RelationKind::Covariance => {
            for s in &pool {
                let v = isometry_matrix(sg, s, w)?;
                for x in setup.family.iter() {
                    let lhs = v.mul(&char_projection(sg, x, w)?)?.mul(&v.adjoint())?;
                    let rhs = char_projection(sg, &sg.translate(s, x)?, w)?;
                    check(format!("s={s} X={x}"), lhs, rhs)?;
                }
            }
        }
        RelationKind::Semilattice => {
            for (x, y) in setup.family.iter().tuple_combinations() {
                let lhs = char_projection(sg, x, w)?.mul(&char_projection(sg, y, w)?)?;
                let rhs = char_projection(sg, &sg.intersect(x, y)?, w)?;
                check(format!("X={x} Y={y}"), lhs, rhs)?;
            }
        }
        RelationKind::Isometry => {
            let one = TruncatedOperator::exact(SparseMatrix::identity(w.len()));
            for s in w.iter() {
                let v = isometry_matrix(sg, s, w)?;
                check(format!("s={s}"), v.adjoint().mul(&v)?, one.clone())?;
            }
        }
        RelationKind::CsGradeOne => {
            let group = sg.grading_group();
            let mut words: Vec<HullWord> = Vec::new();
            for k in 1..=2 {
                for pairs in std::iter::repeat_n(pool.iter().cartesian_product(&pool), k).multi_cartesian_product() {
                    let pairs = pairs.into_iter().map(|(t, s)| (t.clone(), s.clone())).collect();
                    words.push(HullWord::new(pairs)?);
                }
            }
            for _ in 0..setup.random_words {
                let v = h.random_word(rng, &pool, 3);
                words.push(v.concat(&v.star()));
                words.push(h.random_word(rng, &pool, 4));
            }
            for word in words {
                let grade = word.pairs().iter().fold(group.identity(), |acc, (t, s)| {
                    group.mul(&group.mul(&acc, &group.inv(&sg.emb(t))), &sg.emb(s))
                });
                if !group.is_identity(&grade) {
                    continue;
                }
                let x = h.eval(&word).domain().clone();
                check(format!("word={word} X={x}"), word_operator(sg, &word, w)?, char_projection(sg, &x, w)?)?;
            }
        }
        RelationKind::Intertwiner => {
            let t = intertwiner_matrix(h, w, setup.hull_window)?;
            for f in setup.elements {
                let lhs = t.adjoint().mul(&regular_rep_matrix(h, f, setup.hull_window))?.mul(&t)?;
                check(format!("f={f}"), lhs, hull_matrix(h, f, w))?;
            }
        }
        RelationKind::Expectation => {
            for f in setup.elements {
                let omega = hull_matrix(h, f, w);
                let e = omega.conditional_expectation()?;
                let fixed = e.agrees_on_core(&omega);
                let moves = omega.matrix().entries().any(|(i, j, _)| i != j && omega.col_core().contains(&j));
                match (h.is_idempotent(f), fixed, moves) {
                    (true, Ok(columns), _) => instances.push(Instance { label: format!("f={f}"), columns }),
                    (false, Err(j), true) => instances.push(Instance { label: format!("f={f}"), columns: j + 1 }),
                    // nothing moves inside the window
                    (false, _, false) => {}
                    _ => {
                        return Err(Error::Invariant(format!(
                            "expectation relation fails for f={f}: idempotent={}, fixed by E={}",
                            h.is_idempotent(f),
                            fixed.is_ok()
                        )))
                    }
                }
            }
        }
    }
    Ok(RelationReport { kind, instances })
}
