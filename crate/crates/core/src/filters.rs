//! Finite truncations of `J(S) ∪ {∅}` as meet-semilattices, their filters,
//! and the maximal-representation test.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ideal::{IdealFamily, RightIdeal};
use crate::semigroup::Semigroup;

/// A finite meet-semilattice of ideals with `Full` on top and `Empty` at the bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemilattice {
    elements: Vec<RightIdeal>,
    meet: Vec<Vec<usize>>,
    top: usize,
    zero: usize,
}

impl FiniteSemilattice {
    pub fn elements(&self) -> &[RightIdeal] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    /// `a ≤ b` iff `a ∧ b = a`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet[a][b] == a
    }

    pub fn index_of(&self, x: &RightIdeal) -> Option<usize> {
        self.elements.iter().position(|y| y == x)
    }

    /// `{c : a ≤ c}`.
    pub fn up_set(&self, a: usize) -> BTreeSet<usize> {
        (0..self.len()).filter(|&c| self.leq(a, c)).collect()
    }
}

/// Builds the semilattice of an intersection-closed family with `∅` adjoined.
pub fn truncate_semilattice(sg: &Semigroup, family: &IdealFamily) -> Result<FiniteSemilattice> {
    let mut elements = family.members().to_vec();
    if !elements.contains(&RightIdeal::Empty) {
        elements.push(RightIdeal::Empty);
    }
    let mut meet = vec![vec![0; elements.len()]; elements.len()];
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            let m = sg.intersect(x, y)?;
            meet[i][j] = elements.iter().position(|z| *z == m).ok_or_else(|| {
                Error::Precondition(format!("{x} ∩ {y} = {m} is missing from the family"))
            })?;
        }
    }
    let top = elements
        .iter()
        .position(RightIdeal::is_full)
        .ok_or_else(|| Error::Precondition("the family does not contain S".into()))?;
    let zero = elements.iter().position(RightIdeal::is_empty).unwrap();
    Ok(FiniteSemilattice { elements, meet, top, zero })
}

/// An up-closed, meet-closed set containing the top and not the zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Filter {
    members: BTreeSet<usize>,
}

impl Filter {
    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(&a)
    }

    /// Minimal members, in index order.
    pub fn minimal(&self, l: &FiniteSemilattice) -> Vec<usize> {
        self.members
            .iter()
            .copied()
            .filter(|&a| !self.members.iter().any(|&b| b != a && l.leq(b, a)))
            .collect()
    }

    /// `[X, ...]` listing the minimal members.
    pub fn render(&self, l: &FiniteSemilattice) -> String {
        format!("[{}]", self.minimal(l).iter().map(|&i| &l.elements[i]).join(", "))
    }
}

pub fn is_filter(subset: &BTreeSet<usize>, l: &FiniteSemilattice) -> bool {
    subset.contains(&l.top)
        && !subset.contains(&l.zero)
        && subset.iter().all(|&a| (0..l.len()).all(|c| !l.leq(a, c) || subset.contains(&c)))
        && subset.iter().all(|&a| subset.iter().all(|&b| subset.contains(&l.meet(a, b))))
}

/// All filters, ordered by their minimal members.
///
/// A filter is closed under finite meets, so in a finite semilattice its
/// minimal antichain is the single element `m = ⋀ F` and `F = ↑m`; the
/// search therefore runs over singleton antichains `{m}` with `m ≠ 0`.
pub fn enumerate_filters(l: &FiniteSemilattice) -> Vec<Filter> {
    let mut out: Vec<(usize, Filter)> = (0..l.len())
        .filter(|&m| m != l.zero)
        .map(|m| (m, Filter { members: l.up_set(m) }))
        .collect();
    out.sort_by_key(|(m, _)| *m);
    out.into_iter()
        .map(|(_, f)| {
            debug_assert!(is_filter(&f.members, l));
            f
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepresentationVerdict {
    /// The set representation `X -> X ⊆ S` is maximal.
    Maximal,
    /// `target` is the union of the strictly smaller `parts`.
    NotMaximal { parts: Vec<RightIdeal>, target: RightIdeal },
}

impl RepresentationVerdict {
    pub fn is_maximal(&self) -> bool {
        matches!(self, RepresentationVerdict::Maximal)
    }
}

impl fmt::Display for RepresentationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepresentationVerdict::Maximal => write!(f, "maximal"),
            RepresentationVerdict::NotMaximal { parts, target } => {
                write!(f, "not maximal: {} = {target}", parts.iter().join(" ∪ "))
            }
        }
    }
}

/// Decides whether some nonzero `b` equals, as a set, the union of elements
/// strictly below it in the semilattice order.
pub fn maximal_representation_check(sg: &Semigroup, l: &FiniteSemilattice) -> RepresentationVerdict {
    for b in (0..l.len()).filter(|&b| b != l.zero) {
        let below: Vec<RightIdeal> = (0..l.len())
            .filter(|&a| a != b && a != l.zero && l.leq(a, b))
            .map(|a| l.elements[a].clone())
            .collect();
        let target = &l.elements[b];
        if !below.is_empty() && sg.union_covers(&below, target) {
            return RepresentationVerdict::NotMaximal { parts: sg.smallest_cover(below, target), target: target.clone() };
        }
    }
    RepresentationVerdict::Maximal
}
