//! Buchberger's algorithm and standard monomial bases of zero-dimensional
//! quotients.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};

/// Weighted-degree order with a lexicographic (`x > y > z`) tie-break.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub weights: [u64; 3],
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder { weights: [1, 1, 1] }
    }
}

impl MonomialOrder {
    pub fn weighted(weights: [u64; 3]) -> Result<Self> {
        if weights.contains(&0) {
            return Err(Error::usage("monomial order weights must be positive"));
        }
        Ok(MonomialOrder { weights })
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.weighted_degree(&self.weights)
            .cmp(&b.weighted_degree(&self.weights))
            .then_with(|| a.cmp(b))
    }

    pub fn leading_term<'p>(&self, p: &'p Polynomial) -> Option<(&'p Monomial, &'p Rational)> {
        p.terms().max_by(|(a, _), (b, _)| self.cmp(a, b))
    }

    pub fn leading_monomial(&self, p: &Polynomial) -> Option<Monomial> {
        self.leading_term(p).map(|(m, _)| *m)
    }

    fn monic(&self, p: &Polynomial) -> Polynomial {
        match self.leading_term(p) {
            Some((_, c)) => p.scale(&c.recip()),
            None => p.clone(),
        }
    }
}

/// The three partial derivatives of `f`.
pub fn jacobian_ideal(f: &Polynomial) -> [Polynomial; 3] {
    [f.derivative(0), f.derivative(1), f.derivative(2)]
}

/// A reduced Gröbner basis: monic, inter-reduced, sorted by ascending
/// leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| self.order.leading_monomial(p).expect("nonzero basis element"))
            .collect()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        normal_form(p, &self.polys, &self.order)
    }

    /// Every S-polynomial of the basis reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        (0..self.polys.len()).all(|i| {
            (i + 1..self.polys.len()).all(|j| {
                self.normal_form(&s_polynomial(&self.polys[i], &self.polys[j], &self.order))
                    .is_zero()
            })
        })
    }
}

/// Fully reduces `p` modulo `divisors`.
pub fn normal_form(p: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let leads: Vec<(Monomial, Rational)> = divisors
        .iter()
        .filter_map(|g| order.leading_term(g).map(|(m, c)| (*m, c.clone())))
        .collect();
    let mut rest = p.clone();
    let mut out = Polynomial::zero();
    while let Some((m, c)) = order.leading_term(&rest).map(|(m, c)| (*m, c.clone())) {
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(k) => {
                let (lm, lc) = &leads[k];
                let factor = &c / lc;
                rest = &rest - &divisors[k].mul_term(&factor, &m.div(lm));
            }
            None => {
                out.add_term(m, c.clone());
                rest.add_term(m, -c);
            }
        }
    }
    out
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (mf, cf) = order.leading_term(f).expect("nonzero");
    let (mg, cg) = order.leading_term(g).expect("nonzero");
    let l = mf.lcm(mg);
    &f.mul_term(&cf.recip(), &l.div(mf)) - &g.mul_term(&cg.recip(), &l.div(mg))
}

/// Buchberger's algorithm with the coprime and chain criteria, followed by
/// inter-reduction.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    if gens.is_empty() {
        return Err(Error::usage("buchberger needs at least one generator"));
    }
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| order.monic(g))
        .collect();
    let mut leads: Vec<Monomial> = basis.iter().map(|g| order.leading_monomial(g).unwrap()).collect();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    let pair_key = |a: usize, b: usize| (a.min(b), a.max(b));
    while let Some(&(i, j)) = pending
        .iter()
        .min_by(|&&(a, b), &&(c, d)| {
            order
                .cmp(&leads[a].lcm(&leads[b]), &leads[c].lcm(&leads[d]))
                .then((a, b).cmp(&(c, d)))
        })
    {
        pending.remove(&(i, j));
        let l = leads[i].lcm(&leads[j]);
        if leads[i].is_coprime(&leads[j]) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].divides(&l)
                && !pending.contains(&pair_key(i, k))
                && !pending.contains(&pair_key(j, k))
        });
        if chain {
            continue;
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j], order), &basis, order);
        if !r.is_zero() {
            let r = order.monic(&r);
            let k = basis.len();
            leads.push(order.leading_monomial(&r).unwrap());
            basis.push(r);
            for i in 0..k {
                pending.insert((i, k));
            }
        }
    }
    Ok(GroebnerBasis {
        polys: reduce_basis(basis, order),
        order: *order,
    })
}

fn reduce_basis(basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    let mut sorted = basis;
    sorted.sort_by(|a, b| {
        order.cmp(
            &order.leading_monomial(a).unwrap(),
            &order.leading_monomial(b).unwrap(),
        )
    });
    for g in sorted {
        let lm = order.leading_monomial(&g).unwrap();
        if !minimal
            .iter()
            .any(|h| order.leading_monomial(h).unwrap().divides(&lm))
        {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let lt = order.leading_term(&minimal[i]).map(|(m, c)| (*m, c.clone())).unwrap();
        let mut tail = minimal[i].clone();
        tail.add_term(lt.0, -lt.1.clone());
        let mut p = normal_form(&tail, &others, order);
        p.add_term(lt.0, lt.1);
        reduced.push(order.monic(&p));
    }
    reduced
}

/// Standard monomials of a zero-dimensional quotient together with the
/// basis they were read off.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    pub standard_monomials: Vec<Monomial>,
    pub groebner: Vec<Polynomial>,
}

impl QuotientBasis {
    pub fn len(&self) -> usize {
        self.standard_monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.standard_monomials.is_empty()
    }
}

/// Monomials not divisible by any leading monomial, in increasing order.
pub fn standard_monomials(gb: &GroebnerBasis) -> Result<QuotientBasis> {
    let leads = gb.leading_monomials();
    let mut bounds = [0u32; 3];
    for (v, bound) in bounds.iter_mut().enumerate() {
        *bound = leads
            .iter()
            .filter(|m| (0..3).all(|i| i == v || m.0[i] == 0))
            .map(|m| m.0[v])
            .min()
            .ok_or_else(|| {
                Error::NonIsolated(format!(
                    "no pure power of {} among the leading monomials; the quotient is infinite",
                    crate::poly::VARIABLES[v]
                ))
            })?;
    }
    let mut out = Vec::new();
    for a in 0..bounds[0] {
        for b in 0..bounds[1] {
            for c in 0..bounds[2] {
                let m = Monomial::new(a, b, c);
                if !leads.iter().any(|l| l.divides(&m)) {
                    out.push(m);
                }
            }
        }
    }
    out.sort_by(|a, b| gb.order.cmp(a, b));
    Ok(QuotientBasis {
        standard_monomials: out,
        groebner: gb.polys.clone(),
    })
}

/// Convenience: the Jacobian algebra basis of `f` under `order`.
pub fn jacobian_basis(f: &Polynomial, order: &MonomialOrder) -> Result<QuotientBasis> {
    let gens = jacobian_ideal(f);
    if gens.iter().all(Polynomial::is_zero) {
        return Err(Error::NonIsolated("the Jacobian ideal is zero".into()));
    }
    standard_monomials(&buchberger(&gens, order)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s).unwrap()
    }

    fn lead_set(gb: &GroebnerBasis) -> BTreeSet<Monomial> {
        gb.leading_monomials().into_iter().collect()
    }

    #[test]
    fn jacobian_examples() {
        let [fx, fy, fz] = jacobian_ideal(&p("x^5 + y^3 + z^2"));
        assert_eq!((fx, fy, fz), (p("5x^4"), p("3y^2"), p("2z")));
        for d in jacobian_ideal(&p("17")) {
            assert!(d.is_zero());
        }
        // D_n with n = 6: x^5 + x y^2 + z^2
        let [fx, fy, fz] = jacobian_ideal(&p("x^5 + x*y^2 + z^2"));
        assert_eq!((fx, fy, fz), (p("5x^4 + y^2"), p("2x*y"), p("2z")));
    }

    #[test]
    fn variables_are_already_reduced() {
        let gb = buchberger(&[p("x"), p("y"), p("z")], &MonomialOrder::default()).unwrap();
        assert_eq!(gb.polys(), &[p("z"), p("y"), p("x")]);
        let q = standard_monomials(&gb).unwrap();
        assert_eq!(q.standard_monomials, vec![Monomial::ONE]);
    }

    #[test]
    fn e6_is_a_monomial_ideal() {
        let order = MonomialOrder::weighted([3, 4, 6]).unwrap();
        let gb = buchberger(&jacobian_ideal(&p("x^4 + y^3 + z^2")), &order).unwrap();
        let expected: BTreeSet<Monomial> =
            [Monomial::new(3, 0, 0), Monomial::new(0, 2, 0), Monomial::new(0, 0, 1)].into();
        assert_eq!(lead_set(&gb), expected);
        let q = standard_monomials(&gb).unwrap();
        let got: BTreeSet<Monomial> = q.standard_monomials.iter().copied().collect();
        let want: BTreeSet<Monomial> = [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)]
            .iter()
            .map(|&(a, b)| Monomial::new(a, b, 0))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn e7_hand_buchberger() {
        // weights (2/9, 1/3, 1/2) scaled by 18
        let order = MonomialOrder::weighted([4, 6, 9]).unwrap();
        let gb = buchberger(&jacobian_ideal(&p("x^3y + y^3 + z^2")), &order).unwrap();
        let expected: BTreeSet<Monomial> = [
            Monomial::new(2, 1, 0),
            Monomial::new(3, 0, 0),
            Monomial::new(0, 3, 0),
            Monomial::new(0, 0, 1),
        ]
        .into();
        assert_eq!(lead_set(&gb), expected);
        assert!(gb.s_pairs_reduce_to_zero());
        let q = standard_monomials(&gb).unwrap();
        assert_eq!(q.len(), 7);
    }

    #[test]
    fn d4_standard_monomials() {
        let order = MonomialOrder::weighted([2, 2, 3]).unwrap();
        let q = jacobian_basis(&p("x^3 + x*y^2 + z^2"), &order).unwrap();
        // the weighted tie between x^2 and y^2 is broken towards x
        assert_eq!(
            q.standard_monomials,
            vec![Monomial::ONE, Monomial::new(0, 1, 0), Monomial::new(1, 0, 0), Monomial::new(0, 2, 0)]
        );
    }

    #[test]
    fn non_isolated_is_rejected() {
        // x^2 + y^2: z is free
        let err = jacobian_basis(&p("x^2 + y^2"), &MonomialOrder::default()).unwrap_err();
        assert!(matches!(err, Error::NonIsolated(_)));
        assert!(buchberger(&[], &MonomialOrder::default()).is_err());
    }

    #[test]
    fn generator_order_does_not_matter() {
        let order = MonomialOrder::weighted([4, 6, 9]).unwrap();
        let mut gens = jacobian_ideal(&p("x^3y + y^3 + z^2")).to_vec();
        let a = buchberger(&gens, &order).unwrap();
        gens.reverse();
        gens[0] = gens[0].scale(&int(5));
        let b = buchberger(&gens, &order).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn normal_form_is_idempotent_and_linear() {
        let order = MonomialOrder::weighted([4, 6, 9]).unwrap();
        let gb = buchberger(&jacobian_ideal(&p("x^3y + y^3 + z^2")), &order).unwrap();
        let f = p("x^4*y + 3x^2 - y^5 + 2z*x");
        let g = p("x^2*y^2 - 1/3*x^3 + y^4");
        let nf = gb.normal_form(&f);
        assert_eq!(gb.normal_form(&nf), nf);
        let lhs = gb.normal_form(&(&f.scale(&int(2)) + &g));
        let rhs = &nf.scale(&int(2)) + &gb.normal_form(&g);
        assert_eq!(lhs, rhs);
    }
}
