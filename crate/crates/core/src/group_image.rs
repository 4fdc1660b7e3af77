//! Left reversibility, left thickness, the maximal group image `G(S)` with
//! `γ: S -> G(S)`, extension of homomorphisms, and Følner means.

use std::fmt;

use num_traits::One;
use rand::Rng;

use crate::error::{Error, Result};
use crate::group::{GroupDescriptor, GroupElement, Rational};
use crate::ideal::RightIdeal;
use crate::semigroup::{Backend, Semigroup, SemigroupElement, Window};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reversibility {
    Yes,
    /// `sS ∩ tS = ∅`.
    No { s: SemigroupElement, t: SemigroupElement },
}

impl Reversibility {
    pub fn is_yes(&self) -> bool {
        matches!(self, Reversibility::Yes)
    }
}

impl fmt::Display for Reversibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reversibility::Yes => write!(f, "yes"),
            Reversibility::No { s, t } => write!(f, "no (witness {s}, {t})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThickVerdict {
    /// A common element of every `g_i S ∩ S`.
    Nonempty(SemigroupElement),
    Empty,
}

impl ThickVerdict {
    pub fn is_nonempty(&self) -> bool {
        matches!(self, ThickVerdict::Nonempty(_))
    }
}

impl Semigroup {
    pub fn is_left_reversible(&self) -> Reversibility {
        let no = |s: SemigroupElement, t: SemigroupElement| {
            let x = self.meet(
                &self.shift(&self.emb(&s), &RightIdeal::Full),
                &self.shift(&self.emb(&t), &RightIdeal::Full),
            );
            assert!(x.is_empty(), "{s}S ∩ {t}S = {x}");
            Reversibility::No { s, t }
        };
        match self.backend() {
            Backend::FreeMonoid(k) if *k >= 2 => {
                no(SemigroupElement::Word(Word::letter(0)), SemigroupElement::Word(Word::letter(1)))
            }
            Backend::AxPlusB => no(SemigroupElement::Affine(0, 2), SemigroupElement::Affine(1, 2)),
            _ => Reversibility::Yes,
        }
    }

    /// Decides whether `⋂ (g_i S ∩ S)` is nonempty.
    pub fn left_thick_check(&self, gs: &[GroupElement]) -> Result<ThickVerdict> {
        let group = self.grading_group();
        let mut x = RightIdeal::Full;
        for g in gs {
            if !group.contains(g) {
                return Err(Error::BackendMismatch(format!("{g} is not in {group}")));
            }
            x = self.meet(&x, &self.shift(g, &RightIdeal::Full));
        }
        Ok(match self.least_member(&x) {
            Some(m) => ThickVerdict::Nonempty(m),
            None => ThickVerdict::Empty,
        })
    }

    /// The maximal group image of a left reversible semigroup.
    pub fn group_of_s(&self) -> Result<GroupDescriptor> {
        if let Reversibility::No { s, t } = self.is_left_reversible() {
            return Err(Error::Unsupported {
                backend: self.name(),
                reason: format!("not left reversible: {s}S ∩ {t}S is empty"),
            });
        }
        Ok(match self.backend() {
            Backend::Numerical(ns) => GroupDescriptor::IntegerLattice(ns.gcd()),
            _ => self.grading_group(),
        })
    }

    /// `γ(s)`.
    pub fn gamma(&self, s: &SemigroupElement) -> Result<GroupElement> {
        self.group_of_s()?;
        self.embed(s)
    }

    /// `|F_N ∩ X| / |F_N|` with `F_N` the box `{0..N-1}^n` or the first `N`
    /// members of a numerical semigroup.
    pub fn folner_mean(&self, x: &RightIdeal, n: u64) -> Result<Rational> {
        self.check_ideal(x)?;
        if n == 0 {
            return Err(Error::Domain("Følner set of size zero".into()));
        }
        match self.backend() {
            Backend::PositiveCone(dim) => {
                let count: i128 = match x {
                    RightIdeal::Empty => 0,
                    RightIdeal::Full => (n as i128).pow(*dim as u32),
                    RightIdeal::Corner(p) => {
                        p.iter().map(|&pi| n.saturating_sub(pi) as i128).product()
                    }
                    _ => unreachable!(),
                };
                Ok(Rational::new(count, (n as i128).pow(*dim as u32)))
            }
            Backend::Numerical(ns) => {
                let count = (0..n as usize)
                    .filter(|&k| self.member(&SemigroupElement::Natural(ns.nth_member(k)), x))
                    .count();
                Ok(Rational::new(count as i128, n as i128))
            }
            _ => Err(self.no_folner()),
        }
    }

    /// A `c` with `folner_mean(X, N) >= 1 - c/N` for every `N`.
    pub fn folner_constant(&self, x: &RightIdeal) -> Result<Option<u64>> {
        self.check_ideal(x)?;
        match (self.backend(), x) {
            (_, RightIdeal::Empty) => Ok(None),
            (Backend::PositiveCone(_) | Backend::Numerical(_), RightIdeal::Full) => Ok(Some(0)),
            (Backend::PositiveCone(_), RightIdeal::Corner(p)) => Ok(Some(p.iter().sum())),
            (Backend::Numerical(ns), RightIdeal::Cofinite { threshold, below }) => {
                let missing = ns.members_up_to(*threshold - 1).len() - below.len();
                Ok(Some(missing as u64))
            }
            _ => Err(self.no_folner()),
        }
    }

    fn no_folner(&self) -> Error {
        Error::Unsupported {
            backend: self.name(),
            reason: "Følner means are computed for positive cones and numerical semigroups".into(),
        }
    }
}

/// A homomorphism `S -> H`, given on the defining generators.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source: Semigroup,
    target: GroupDescriptor,
    images: Vec<GroupElement>,
}

impl Homomorphism {
    /// Validates the images against products on a window of `S`.
    pub fn new(source: &Semigroup, target: GroupDescriptor, images: Vec<GroupElement>) -> Result<Self> {
        let gens = source.defining_generators().ok_or_else(|| Error::Unsupported {
            backend: source.name(),
            reason: "no finite generating set".into(),
        })?;
        if gens.len() != images.len() {
            return Err(Error::Precondition(format!(
                "{} generator images given, {} needed",
                images.len(),
                gens.len()
            )));
        }
        if let Some(g) = images.iter().find(|g| !target.contains(g)) {
            return Err(Error::BackendMismatch(format!("{g} is not in {target}")));
        }
        let phi = Homomorphism { source: source.clone(), target, images };
        if let Backend::FiniteTable(t) = source.backend() {
            if phi.images[t.identity()] != phi.target.identity() {
                return Err(Error::Precondition("the identity must map to the identity".into()));
            }
        }
        let window = source.window_of_size(40);
        for s in window.iter() {
            for t in window.iter() {
                let lhs = phi.eval(&source.mul(s, t));
                let rhs = phi.target.mul(&phi.eval(s), &phi.eval(t));
                if lhs != rhs {
                    return Err(Error::Precondition(format!(
                        "not a homomorphism: φ({s}·{t}) = {lhs} but φ({s})φ({t}) = {rhs}"
                    )));
                }
            }
        }
        Ok(phi)
    }

    pub fn target(&self) -> &GroupDescriptor {
        &self.target
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    pub fn apply(&self, s: &SemigroupElement) -> Result<GroupElement> {
        self.source.check(s)?;
        Ok(self.eval(s))
    }

    fn eval(&self, s: &SemigroupElement) -> GroupElement {
        let t = &self.target;
        let combine = |counts: &[u64]| {
            counts.iter().zip(&self.images).fold(t.identity(), |acc, (&k, g)| {
                t.mul(&acc, &t.power(g, k as i64))
            })
        };
        match (self.source.backend(), s) {
            (Backend::FreeMonoid(_), SemigroupElement::Word(w)) => w
                .letters()
                .iter()
                .fold(t.identity(), |acc, &l| t.mul(&acc, &self.images[l as usize])),
            (Backend::PositiveCone(_), SemigroupElement::Vector(v)) => combine(v),
            (Backend::Numerical(ns), SemigroupElement::Natural(n)) => {
                combine(&ns.factorization(*n).expect("member"))
            }
            (Backend::FiniteTable(_), SemigroupElement::Table(i)) => self.images[*i].clone(),
            _ => unreachable!("checked element"),
        }
    }
}

/// The unique `φ': G(S) -> H` with `φ' ∘ γ = φ`.
#[derive(Clone, Debug)]
pub struct ExtendedHomomorphism {
    phi: Homomorphism,
    source: GroupDescriptor,
}

/// Extends `φ` along `γ`, evaluating on fractions `γ(s)^-1 γ(t)`.
pub fn extend_homomorphism(phi: &Homomorphism) -> Result<ExtendedHomomorphism> {
    let source = phi.source.group_of_s()?;
    Ok(ExtendedHomomorphism { phi: phi.clone(), source })
}

impl ExtendedHomomorphism {
    pub fn source(&self) -> &GroupDescriptor {
        &self.source
    }

    pub fn target(&self) -> &GroupDescriptor {
        &self.phi.target
    }

    /// A pair `(s, t)` with `γ(s)^-1 γ(t) = g`.
    pub fn representative(&self, g: &GroupElement) -> Result<(SemigroupElement, SemigroupElement)> {
        if !self.source.contains(g) {
            return Err(Error::BackendMismatch(format!("{g} is not in {}", self.source)));
        }
        let sg = &self.phi.source;
        let pair = match (sg.backend(), g) {
            (Backend::PositiveCone(_), GroupElement::Lattice(v)) => (
                SemigroupElement::Vector(v.iter().map(|&x| (-x).max(0) as u64).collect()),
                SemigroupElement::Vector(v.iter().map(|&x| x.max(0) as u64).collect()),
            ),
            (Backend::FreeMonoid(1), GroupElement::Free(w)) => {
                let n: i64 = w.signed_letters().iter().map(|&l| l.signum() as i64).sum();
                let word = |k: i64| SemigroupElement::Word(Word::from_letters(vec![0; k.max(0) as usize]));
                (word(-n), word(n))
            }
            (Backend::Numerical(ns), GroupElement::Integer(x)) => {
                // s past the conductor with s + x also past it
                let d = ns.gcd() as i64;
                let c = ns.conductor() as i64;
                let s = c + (-x).max(0);
                let s = s + (d - s.rem_euclid(d)) % d;
                (SemigroupElement::Natural(s as u64), SemigroupElement::Natural((s + x) as u64))
            }
            (Backend::FiniteTable(_), GroupElement::Table(i)) => {
                (sg.identity(), SemigroupElement::Table(*i))
            }
            _ => unreachable!("left reversible backends only"),
        };
        debug_assert_eq!(
            self.source.mul(&self.source.inv(&sg.emb(&pair.0)), &sg.emb(&pair.1)),
            *g
        );
        Ok(pair)
    }

    /// `φ(s)^-1 φ(t)` for the canonical representative of `g`.
    pub fn apply(&self, g: &GroupElement) -> Result<GroupElement> {
        let (s, t) = self.representative(g)?;
        Ok(self.on_fraction(&s, &t))
    }

    fn on_fraction(&self, s: &SemigroupElement, t: &SemigroupElement) -> GroupElement {
        let h = &self.phi.target;
        h.mul(&h.inv(&self.phi.eval(s)), &self.phi.eval(t))
    }

    /// Images of the standard generators of `G(S)`: unit vectors, `d`, the
    /// free generator, or every table element.
    pub fn generator_images(&self) -> Vec<GroupElement> {
        let gens: Vec<GroupElement> = match &self.source {
            GroupDescriptor::Integers(n) => (0..*n)
                .map(|i| GroupElement::Lattice((0..*n).map(|j| (i == j) as i64).collect()))
                .collect(),
            GroupDescriptor::IntegerLattice(d) => vec![GroupElement::Integer(*d as i64)],
            GroupDescriptor::FreeGroup(_) => {
                vec![self.phi.source.emb(&SemigroupElement::Word(Word::letter(0)))]
            }
            GroupDescriptor::FiniteGroup(t) => (0..t.order()).map(GroupElement::Table).collect(),
            GroupDescriptor::RationalAffine => unreachable!("not a maximal group image here"),
        };
        gens.iter().map(|g| self.apply(g).expect("generator of the source")).collect()
    }

    /// First `s` in the window with `φ'(γ(s)) ≠ φ(s)`.
    pub fn check_on_window(&self, window: &Window) -> Option<SemigroupElement> {
        window
            .iter()
            .find(|s| self.apply(&self.phi.source.emb(s)).ok() != Some(self.phi.eval(s)))
            .cloned()
    }

    /// Compares the canonical value at `γ(s)^-1 γ(t)` with the value on a
    /// second representative `(u s, u t)`. Returns the number of pairs
    /// checked.
    pub fn verify_well_defined<R: Rng>(&self, samples: usize, window: &Window, rng: &mut R) -> Result<usize> {
        let sg = &self.phi.source;
        let group = &self.source;
        for _ in 0..samples {
            let mut pick = || window.get(rng.gen_range(0..window.len())).clone();
            let (s, t, u) = (pick(), pick(), pick());
            let g = group.mul(&group.inv(&sg.emb(&s)), &sg.emb(&t));
            let us = sg.mul(&u, &s);
            let ut = sg.mul(&u, &t);
            let second = self.on_fraction(&us, &ut);
            let canonical = self.apply(&g)?;
            if second != canonical || self.on_fraction(&s, &t) != canonical {
                return Err(Error::Invariant(format!(
                    "φ' is not well defined at {g}: representatives ({s}, {t}) and ({us}, {ut}) give {canonical} and {second}"
                )));
            }
        }
        Ok(samples)
    }
}

impl fmt::Display for ExtendedHomomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self.generator_images().iter().map(|g| g.to_string()).collect();
        write!(f, "{} -> {} with generator images ({})", self.source, self.phi.target, imgs.join(", "))
    }
}

/// `true` iff `μ(χ_X) = 1` is approached from below with the stated constant.
pub fn folner_bound_holds(mean: &Rational, c: u64, n: u64) -> bool {
    *mean >= Rational::one() - Rational::new(c as i128, n as i128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reversibility_examples() {
        assert!(Semigroup::positive_cone(3).is_left_reversible().is_yes());
        assert_eq!(
            Semigroup::free_monoid(2).is_left_reversible(),
            Reversibility::No {
                s: SemigroupElement::Word(Word::letter(0)),
                t: SemigroupElement::Word(Word::letter(1))
            }
        );
        assert_eq!(
            Semigroup::ax_plus_b().is_left_reversible(),
            Reversibility::No { s: SemigroupElement::Affine(0, 2), t: SemigroupElement::Affine(1, 2) }
        );
        assert!(Semigroup::free_monoid(1).is_left_reversible().is_yes());
    }

    #[test]
    fn thickness_examples() {
        let z = Semigroup::naturals();
        let gs = [GroupElement::Lattice(vec![-3]), GroupElement::Lattice(vec![7])];
        assert!(z.left_thick_check(&gs).unwrap().is_nonempty());
        let f = Semigroup::free_monoid(2);
        let a = f.embed(&SemigroupElement::Word(Word::letter(0))).unwrap();
        let b = f.embed(&SemigroupElement::Word(Word::letter(1))).unwrap();
        assert_eq!(f.left_thick_check(&[a, b]).unwrap(), ThickVerdict::Empty);
        let ns = Semigroup::numerical(&[2, 3]).unwrap();
        let gs = [GroupElement::Integer(-1), GroupElement::Integer(5)];
        assert!(ns.left_thick_check(&gs).unwrap().is_nonempty());
    }

    #[test]
    fn group_examples() {
        assert_eq!(Semigroup::naturals().group_of_s().unwrap(), GroupDescriptor::Integers(1));
        assert_eq!(
            Semigroup::numerical(&[2, 3]).unwrap().group_of_s().unwrap(),
            GroupDescriptor::IntegerLattice(1)
        );
        assert_eq!(Semigroup::positive_cone(2).group_of_s().unwrap(), GroupDescriptor::Integers(2));
        assert!(matches!(
            Semigroup::free_monoid(2).group_of_s(),
            Err(Error::Unsupported { .. })
        ));
        let ns = Semigroup::numerical(&[2, 3]).unwrap();
        assert_eq!(ns.gamma(&SemigroupElement::Natural(5)).unwrap(), GroupElement::Integer(5));
    }

    #[test]
    fn extension_examples() {
        let c = Semigroup::positive_cone(2);
        let phi = Homomorphism::new(
            &c,
            GroupDescriptor::Integers(1),
            vec![GroupElement::Lattice(vec![1]), GroupElement::Lattice(vec![2])],
        )
        .unwrap();
        let ext = extend_homomorphism(&phi).unwrap();
        assert_eq!(ext.generator_images(), vec![GroupElement::Lattice(vec![1]), GroupElement::Lattice(vec![2])]);
        assert_eq!(ext.apply(&GroupElement::Lattice(vec![-3, 1])).unwrap(), GroupElement::Lattice(vec![-1]));

        let ns = Semigroup::numerical(&[2, 3]).unwrap();
        let phi = Homomorphism::new(
            &ns,
            GroupDescriptor::IntegerLattice(1),
            vec![GroupElement::Integer(2), GroupElement::Integer(3)],
        )
        .unwrap();
        let ext = extend_homomorphism(&phi).unwrap();
        assert_eq!(ext.apply(&GroupElement::Integer(1)).unwrap(), GroupElement::Integer(1));
        assert_eq!(ext.apply(&GroupElement::Integer(-7)).unwrap(), GroupElement::Integer(-7));

        let bad = Homomorphism::new(
            &ns,
            GroupDescriptor::IntegerLattice(1),
            vec![GroupElement::Integer(1), GroupElement::Integer(1)],
        );
        assert!(matches!(bad, Err(Error::Precondition(_))));
    }

    #[test]
    fn folner_examples() {
        let z = Semigroup::naturals();
        let two = RightIdeal::Corner(vec![2]);
        assert_eq!(z.folner_mean(&two, 100).unwrap(), Rational::new(98, 100));
        assert_eq!(z.folner_mean(&RightIdeal::Full, 7).unwrap(), Rational::one());
        let c = Semigroup::positive_cone(2);
        assert_eq!(c.folner_mean(&RightIdeal::Corner(vec![1, 1]), 10).unwrap(), Rational::new(81, 100));
        let ns = Semigroup::numerical(&[2, 3]).unwrap();
        let x = RightIdeal::Cofinite { threshold: 5, below: vec![] };
        assert_eq!(ns.folner_constant(&x).unwrap(), Some(4));
        assert_eq!(ns.folner_mean(&x, 10).unwrap(), Rational::new(6, 10));
        assert!(Semigroup::ax_plus_b().folner_mean(&RightIdeal::Full, 3).is_err());
    }
}
