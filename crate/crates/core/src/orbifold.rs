//! Twisted sectors, age-graded orbifold cohomology and the skew group algebra.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::ade::{AdeType, Family};
use crate::arith::rational::{self, Rational};
use crate::arith::CyclotomicNumber as Cyc;
use crate::error::{Error, Result};
use crate::group::{ConjugacyClass, FiniteSubgroup, GroupElement};
use crate::poly::Polynomial;
use crate::spectrum::SpectralPolynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedSector {
    pub class_index: usize,
    pub class_size: usize,
    pub representative: GroupElement,
    /// Element order `m`.
    pub m: usize,
    /// `(k/m, ((m-k) mod m)/m)` with the smaller entry first.
    pub exponent_pair: [Rational; 2],
    pub age: Rational,
    /// `j/N` when the representative is diagonal with top-left entry `zeta_N^j`.
    pub diagonal_exponent: Option<Rational>,
}

impl TwistedSector {
    pub fn is_untwisted(&self) -> bool {
        self.age.is_zero()
    }
}

/// Exponent of `z` as a power of `zeta_n`, if it is one.
fn root_of_unity_exponent(z: &Cyc, n: u32) -> Option<u32> {
    (0..n).find(|&j| Cyc::zeta_pow(n, j as i64).value_eq(z))
}

pub fn sector_data(group: &FiniteSubgroup, classes: &[ConjugacyClass]) -> Result<Vec<TwistedSector>> {
    let n = group.cyclotomic_order();
    classes
        .iter()
        .enumerate()
        .map(|(idx, class)| {
            let m = class.element_order;
            let k = (0..m as i64)
                .find(|&k| {
                    let sum = Cyc::zeta_pow(m as u32, k) + Cyc::zeta_pow(m as u32, -k);
                    sum.value_eq(&class.trace)
                })
                .ok_or_else(|| {
                    Error::internal(
                        "sector_data",
                        format!("no k with zeta_{m}^k + zeta_{m}^-k = {}", class.trace),
                    )
                })?;
            let mm = m as i64;
            let mut pair = [rational::rat(k, mm), rational::rat((mm - k).rem_euclid(mm), mm)];
            pair.sort();
            let age = &pair[0] + &pair[1];
            let rep = &class.representative;
            let diagonal_exponent = if rep.is_diagonal() {
                root_of_unity_exponent(rep.entry(0, 0), n).map(|j| rational::rat(j as i64, n as i64))
            } else {
                None
            };
            Ok(TwistedSector {
                class_index: idx,
                class_size: class.size,
                representative: rep.clone(),
                m,
                exponent_pair: pair,
                age,
                diagonal_exponent,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbifoldCohomology {
    /// Cohomological degree `2 * age` to dimension.
    pub graded_dims: BTreeMap<u32, usize>,
    pub total: usize,
}

pub fn orbifold_cohomology(sectors: &[TwistedSector]) -> Result<OrbifoldCohomology> {
    let mut graded_dims = BTreeMap::new();
    for s in sectors {
        let deg = &s.age * rational::int(2);
        let deg = rational::to_i64(&deg)
            .filter(|&d| d >= 0)
            .ok_or_else(|| {
                Error::internal(
                    "orbifold_cohomology",
                    format!("sector {} has non-integral degree 2*{}", s.class_index, rational::to_string(&s.age)),
                )
            })?;
        *graded_dims.entry(deg as u32).or_insert(0) += 1;
    }
    Ok(OrbifoldCohomology {
        graded_dims,
        total: sectors.len(),
    })
}

/// A polynomial in `x, y` with coefficients in `Q(zeta_order)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BivariatePoly {
    order: u32,
    terms: BTreeMap<(u32, u32), Cyc>,
}

impl BivariatePoly {
    pub fn zero(order: u32) -> Self {
        BivariatePoly {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::term(Cyc::one(order), 0, 0)
    }

    pub fn term(coeff: Cyc, i: u32, j: u32) -> Self {
        let mut p = Self::zero(coeff.order());
        p.add_term((i, j), coeff);
        p
    }

    pub fn x(order: u32) -> Self {
        Self::term(Cyc::one(order), 1, 0)
    }

    pub fn y(order: u32) -> Self {
        Self::term(Cyc::one(order), 0, 1)
    }

    /// Rational polynomial in `x, y`; any `z` is a usage error.
    pub fn from_polynomial(p: &Polynomial, order: u32) -> Result<Self> {
        let mut out = Self::zero(order);
        for (m, c) in p.terms() {
            let [i, j, k] = m.exponents();
            if k != 0 {
                return Err(Error::usage(format!("{p} is not a polynomial in x, y")));
            }
            out.add_term((i, j), Cyc::from_rational(order, c.clone()));
        }
        Ok(out)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Cyc> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exps: (u32, u32), coeff: Cyc) {
        let coeff = match coeff.order().cmp(&self.order) {
            std::cmp::Ordering::Equal => coeff,
            _ => {
                let target = num_integer::lcm(self.order, coeff.order());
                if target != self.order {
                    self.promote(target);
                }
                coeff.embed_order(target).expect("target is a multiple")
            }
        };
        let entry = self.terms.entry(exps).or_insert_with(|| Cyc::zero(coeff.order()));
        *entry = &*entry + &coeff;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    fn promote(&mut self, target: u32) {
        self.order = target;
        for c in self.terms.values_mut() {
            *c = c.embed_order(target).expect("target is a multiple");
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(num_integer::lcm(self.order, other.order));
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &other.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Cyc) -> Self {
        let mut out = Self::zero(num_integer::lcm(self.order, c.order()));
        for (e, v) in &self.terms {
            out.add_term(*e, v * c);
        }
        out
    }

    /// `f^g(x, y) = f(ax + by, cx + dy)`.
    pub fn act(&self, g: &GroupElement) -> Self {
        let order = num_integer::lcm(self.order, g.cyclotomic_order());
        let [[a, b], [c, d]] = g.entries().clone();
        let lin = |p: Cyc, q: Cyc| BivariatePoly::term(p, 1, 0).add(&BivariatePoly::term(q, 0, 1));
        let (u, v) = (lin(a, b), lin(c, d));
        let max_i = self.terms.keys().map(|e| e.0).max().unwrap_or(0);
        let max_j = self.terms.keys().map(|e| e.1).max().unwrap_or(0);
        let powers = |base: &BivariatePoly, top: u32| {
            let mut out = vec![BivariatePoly::one(order)];
            for _ in 0..top {
                let next = out.last().unwrap().mul(base);
                out.push(next);
            }
            out
        };
        let (up, vp) = (powers(&u, max_i), powers(&v, max_j));
        let mut out = Self::zero(order);
        for ((i, j), coeff) in &self.terms {
            out = out.add(&up[*i as usize].mul(&vp[*j as usize]).scale(coeff));
        }
        out
    }

    /// `f(ax + cy, bx + dy)`, the substitution by the transpose. Unlike
    /// [`BivariatePoly::act`] this is a left action, `(f^h)^g = f^{gh}`, and
    /// the two agree on diagonal elements.
    pub fn act_left(&self, g: &GroupElement) -> Self {
        let [[a, b], [c, d]] = g.entries().clone();
        self.act(&GroupElement::new([[a, c], [b, d]]))
    }

    /// Value equality across coefficient fields.
    pub fn value_eq(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .all(|(e, c)| other.terms.get(e).is_some_and(|d| c.value_eq(d)))
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|((i, j), c)| {
                let mono = match (i, j) {
                    (0, 0) => String::new(),
                    _ => [(i, 'x'), (j, 'y')]
                        .iter()
                        .filter(|(e, _)| **e > 0)
                        .map(|(e, v)| if **e == 1 { v.to_string() } else { format!("{v}^{e}") })
                        .collect::<Vec<_>>()
                        .join("*"),
                };
                match (mono.is_empty(), c.is_one()) {
                    (true, _) => format!("({c})"),
                    (false, true) => mono,
                    (false, false) => format!("({c})*{mono}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `f^g = f` for every generator `g`.
pub fn invariance_check(f: &BivariatePoly, group: &FiniteSubgroup) -> bool {
    group.generators().iter().all(|g| f.act(g).value_eq(f))
}

/// Element of `C[x, y] # G`: a sum of `(f_g, g)` keyed by element index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewElement {
    pub ade: AdeType,
    pub terms: BTreeMap<usize, BivariatePoly>,
}

impl SkewElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn value_eq(&self, other: &Self) -> bool {
        self.ade == other.ade
            && self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .all(|(g, f)| other.terms.get(g).is_some_and(|h| f.value_eq(h)))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.ade != other.ade {
            return Err(mixed(self.ade, other.ade));
        }
        let mut terms = self.terms.clone();
        for (g, f) in &other.terms {
            accumulate(&mut terms, *g, f.clone());
        }
        Ok(SkewElement { ade: self.ade, terms })
    }
}

fn mixed(a: AdeType, b: AdeType) -> Error {
    Error::usage(format!("skew group algebra elements over different groups ({a} and {b})"))
}

fn accumulate(terms: &mut BTreeMap<usize, BivariatePoly>, g: usize, f: BivariatePoly) {
    let merged = match terms.remove(&g) {
        Some(old) => old.add(&f),
        None => f,
    };
    if !merged.is_zero() {
        terms.insert(g, merged);
    }
}

/// The skew group algebra of a constructed group.
#[derive(Clone, Copy, Debug)]
pub struct SkewAlgebra<'a> {
    group: &'a FiniteSubgroup,
}

impl<'a> SkewAlgebra<'a> {
    pub fn new(group: &'a FiniteSubgroup) -> Self {
        SkewAlgebra { group }
    }

    pub fn group(&self) -> &'a FiniteSubgroup {
        self.group
    }

    /// `(f, g)` with `g` given by its element index.
    pub fn element(&self, f: BivariatePoly, g: usize) -> Result<SkewElement> {
        if g >= self.group.order() {
            return Err(Error::usage(format!("no element with index {g} in {}", self.group.ade())));
        }
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, g, f);
        Ok(SkewElement {
            ade: self.group.ade(),
            terms,
        })
    }

    /// `(1, I)`.
    pub fn unit(&self) -> SkewElement {
        self.element(BivariatePoly::one(self.group.cyclotomic_order()), 0)
            .expect("identity has index 0")
    }

    pub fn product(&self, u: &SkewElement, v: &SkewElement) -> Result<SkewElement> {
        skew_product(self.group, u, v)
    }
}

/// `(f1, g1)(f2, g2) = (f1 f2^{g1}, g1 g2)`, extended bilinearly, where
/// `f^g` is the left action [`BivariatePoly::act_left`].
pub fn skew_product(group: &FiniteSubgroup, u: &SkewElement, v: &SkewElement) -> Result<SkewElement> {
    for e in [u, v] {
        if e.ade != group.ade() {
            return Err(mixed(e.ade, group.ade()));
        }
    }
    let mut terms = BTreeMap::new();
    for (&g1, f1) in &u.terms {
        let g = &group.elements()[g1];
        for (&g2, f2) in &v.terms {
            accumulate(&mut terms, group.mul_index(g1, g2)?, f1.mul(&f2.act_left(g)));
        }
    }
    Ok(SkewElement { ade: group.ade(), terms })
}

/// Comparison of the spectrum with twisted-sector data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    #[serde(rename = "type")]
    pub ade: String,
    pub mu: u64,
    pub classes: usize,
    /// Spectral numbers, ascending, with repetition.
    pub spectrum: Vec<String>,
    /// Exponent pairs of the nontrivial sectors, in class order.
    pub sector_exponents: Vec<[String; 2]>,
    pub flattened_pairs_match: bool,
    pub smaller_exponents_match: bool,
    /// Top-left diagonal exponent of each nontrivial class, when all are diagonal.
    pub one_exponent_per_class: Option<Vec<String>>,
    /// Only decided for the A family.
    pub a_family_exact_match: Option<bool>,
    pub notes: Vec<String>,
}

fn sorted(mut v: Vec<Rational>) -> Vec<Rational> {
    v.sort();
    v
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational::to_string).collect()
}

pub fn compare_spectrum_orbifold(
    ade: AdeType,
    sp: &SpectralPolynomial,
    sectors: &[TwistedSector],
) -> ComparisonReport {
    let spectrum = sp.values();
    let mu = sp.total();
    let twisted: Vec<&TwistedSector> = sectors.iter().filter(|s| !s.is_untwisted()).collect();
    let flattened = sorted(twisted.iter().flat_map(|s| s.exponent_pair.clone()).collect());
    let smaller = sorted(twisted.iter().map(|s| s.exponent_pair[0].clone()).collect());
    let one_per_class: Option<Vec<Rational>> = twisted
        .iter()
        .map(|s| s.diagonal_exponent.clone())
        .collect::<Option<Vec<_>>>()
        .map(sorted);
    let a_match = (ade.family() == Family::A).then(|| one_per_class.as_ref() == Some(&spectrum));

    let mut notes = Vec::new();
    let classes = sectors.len();
    if mu as usize == classes {
        notes.push(format!("dim Omega_f = mu = {mu} equals dim H_orb = #classes = {classes}"));
    } else {
        notes.push(format!(
            "dim Omega_f = mu = {mu} but dim H_orb = #classes = {classes}; the difference of {} is the untwisted sector, left unaccounted",
            classes as i64 - mu as i64
        ));
    }
    let flattened_pairs_match = flattened == spectrum;
    let smaller_exponents_match = smaller == spectrum;
    notes.push(format!(
        "flattened nontrivial exponent pairs ({} values) {} the spectrum ({mu} values)",
        flattened.len(),
        if flattened_pairs_match { "match" } else { "do not match" }
    ));
    notes.push(format!(
        "smaller exponent per nontrivial class {} the spectrum",
        if smaller_exponents_match { "matches" } else { "does not match" }
    ));
    match a_match {
        Some(true) => notes.push("A family: {k/(n+1)} over nontrivial classes g^k equals the spectrum".into()),
        Some(false) => notes.push("A family: one-exponent-per-class multiset differs from the spectrum".into()),
        None => notes.push("no exact relation asserted outside the A family".into()),
    }
    let ages_one = twisted.iter().all(|s| s.age.is_one());
    if !ages_one {
        notes.push("some nontrivial sector has age != 1".into());
    }

    ComparisonReport {
        ade: ade.to_string(),
        mu,
        classes,
        spectrum: strings(&spectrum),
        sector_exponents: twisted
            .iter()
            .map(|s| [rational::to_string(&s.exponent_pair[0]), rational::to_string(&s.exponent_pair[1])])
            .collect(),
        flattened_pairs_match,
        smaller_exponents_match,
        one_exponent_per_class: one_per_class.as_deref().map(strings),
        a_family_exact_match: a_match,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;
    use crate::group::{build_group, conjugacy_classes};
    use crate::spectrum::{analyze, Grading};

    fn sectors(t: &str) -> (FiniteSubgroup, Vec<TwistedSector>) {
        let g = build_group(t.parse().unwrap()).unwrap();
        let classes = conjugacy_classes(&g).unwrap();
        let s = sector_data(&g, &classes).unwrap();
        (g, s)
    }

    fn bp(s: &str, order: u32) -> BivariatePoly {
        BivariatePoly::from_polynomial(&Polynomial::parse(s).unwrap(), order).unwrap()
    }

    #[test]
    fn sector_examples() {
        let (_, s) = sectors("A1");
        assert_eq!(s[0].exponent_pair, [rat(0, 1), rat(0, 1)]);
        assert!(s[0].age.is_zero());
        assert_eq!(s[1].exponent_pair, [rat(1, 2), rat(1, 2)]);
        assert_eq!(s[1].age, rat(1, 1));

        let (_, s) = sectors("A3");
        let mut pairs: Vec<[Rational; 2]> = s[1..].iter().map(|t| t.exponent_pair.clone()).collect();
        pairs.sort();
        assert_eq!(pairs, vec![[rat(1, 4), rat(3, 4)], [rat(1, 4), rat(3, 4)], [rat(1, 2), rat(1, 2)]]);
        let mut diag: Vec<Rational> = s[1..].iter().map(|t| t.diagonal_exponent.clone().unwrap()).collect();
        diag.sort();
        assert_eq!(diag, vec![rat(1, 4), rat(1, 2), rat(3, 4)]);

        for t in ["D5", "E6", "E7", "E8"] {
            let (_, s) = sectors(t);
            assert!(s[0].age.is_zero());
            assert!(s[1..].iter().all(|x| x.age == rat(1, 1)), "{t}");
        }
    }

    #[test]
    fn cohomology_examples() {
        let one = |xs: &[(u32, usize)]| xs.iter().copied().collect::<BTreeMap<_, _>>();
        let (_, s) = sectors("E8");
        let h = orbifold_cohomology(&s).unwrap();
        assert_eq!((h.graded_dims.clone(), h.total), (one(&[(0, 1), (2, 8)]), 9));
        let (_, s) = sectors("A6");
        let h = orbifold_cohomology(&s).unwrap();
        assert_eq!((h.graded_dims.clone(), h.total), (one(&[(0, 1), (2, 6)]), 7));
        let h = orbifold_cohomology(&s[..1]).unwrap();
        assert_eq!((h.graded_dims.clone(), h.total), (one(&[(0, 1)]), 1));
    }

    #[test]
    fn skew_examples() {
        let (g, _) = sectors("A2");
        let alg = SkewAlgebra::new(&g);
        let n = g.cyclotomic_order();
        let gen = g.index_of(&g.generators()[0]).unwrap();
        // (1, g)(x, I) = (zeta_3 x, g)
        let lhs = alg
            .product(&alg.element(BivariatePoly::one(n), gen).unwrap(), &alg.element(BivariatePoly::x(n), 0).unwrap())
            .unwrap();
        let want = alg.element(BivariatePoly::term(Cyc::zeta(3), 1, 0), gen).unwrap();
        assert!(lhs.value_eq(&want));
        // commutative subalgebra
        let f = bp("x^2 + 3*y", n);
        let h = bp("x*y - 1", n);
        let prod = alg
            .product(&alg.element(f.clone(), 0).unwrap(), &alg.element(h.clone(), 0).unwrap())
            .unwrap();
        assert!(prod.value_eq(&alg.element(f.mul(&h), 0).unwrap()));
        // unit
        let u = alg.element(f, gen).unwrap();
        assert!(alg.product(&alg.unit(), &u).unwrap().value_eq(&u));
        assert!(alg.product(&u, &alg.unit()).unwrap().value_eq(&u));
    }

    #[test]
    fn skew_associativity_on_binary_tetrahedral() {
        let (g, _) = sectors("E6");
        let alg = SkewAlgebra::new(&g);
        let n = g.cyclotomic_order();
        let a = alg.element(bp("x + 2*y^2", n), 3).unwrap().add(&alg.element(bp("y", n), 7).unwrap()).unwrap();
        let b = alg.element(bp("x*y - x", n), 11).unwrap();
        let c = alg.element(bp("x^2 + 1/2", n), 17).unwrap().add(&alg.element(bp("y^3", n), 1).unwrap()).unwrap();
        let left = alg.product(&alg.product(&a, &b).unwrap(), &c).unwrap();
        let right = alg.product(&a, &alg.product(&b, &c).unwrap()).unwrap();
        assert!(left.value_eq(&right));
    }

    #[test]
    fn substitution_rule_is_a_right_action() {
        let (g, _) = sectors("E6");
        let f = bp("x^2*y + 3*x", g.cyclotomic_order());
        let (p, q) = (&g.elements()[5], &g.elements()[9]);
        assert!(p.mul(q) != q.mul(p));
        assert!(f.act(p).act(q).value_eq(&f.act(&p.mul(q))));
        assert!(!f.act(p).act(q).value_eq(&f.act(&q.mul(p))));
        assert!(f.act_left(q).act_left(p).value_eq(&f.act_left(&p.mul(q))));
    }

    #[test]
    fn mixed_groups_rejected() {
        let (g, _) = sectors("A2");
        let (h, _) = sectors("A3");
        let u = SkewAlgebra::new(&g).unit();
        let v = SkewAlgebra::new(&h).unit();
        assert!(matches!(skew_product(&g, &u, &v), Err(Error::Usage(_))));
        assert!(matches!(u.add(&v), Err(Error::Usage(_))));
    }

    #[test]
    fn invariance_examples() {
        for n in 1..=6u32 {
            let (g, _) = sectors(&format!("A{n}"));
            let o = g.cyclotomic_order();
            assert!(invariance_check(&bp("x*y", o), &g));
            assert!(invariance_check(&bp(&format!("x^{}", n + 1), o), &g));
            assert!(!invariance_check(&bp("x", o), &g));
        }
        let (g, _) = sectors("E8");
        assert!(!invariance_check(&bp("x", g.cyclotomic_order()), &g));
        assert!(!invariance_check(&bp("x*y", g.cyclotomic_order()), &g));
        assert!(BivariatePoly::from_polynomial(&Polynomial::parse("z").unwrap(), 4).is_err());
    }

    #[test]
    fn comparison_reports() {
        let report = |t: &str, f: &str| {
            let (g, s) = sectors(t);
            let sp = analyze(&Polynomial::parse(f).unwrap(), Grading::Shifted).unwrap().spectrum;
            compare_spectrum_orbifold(g.ade(), &sp, &s)
        };
        let a3 = report("A3", "x^4 + y^2 + z^2");
        assert_eq!((a3.mu, a3.classes), (3, 4));
        assert_eq!(a3.a_family_exact_match, Some(true));
        assert!(!a3.smaller_exponents_match);
        assert_eq!(a3.one_exponent_per_class, Some(vec!["1/4".into(), "1/2".into(), "3/4".into()]));
        let a1 = report("A1", "x^2 + y^2 + z^2");
        assert_eq!(a1.a_family_exact_match, Some(true));
        assert!(a1.smaller_exponents_match);
        let e8 = report("E8", "x^5 + y^3 + z^2");
        assert_eq!((e8.mu, e8.classes), (8, 9));
        assert_eq!(e8.a_family_exact_match, None);
        assert!(e8.notes[0].contains("untwisted"));
    }
}
