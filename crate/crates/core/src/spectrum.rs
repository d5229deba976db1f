//! Weights, Milnor numbers and spectra of weighted homogeneous singularities.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::rational::{self, Rational};
use crate::error::{Error, Result};
use crate::groebner::{jacobian_basis, MonomialOrder, QuotientBasis};
use crate::poly::{Monomial, Polynomial};

/// A polynomial together with its (unique) quasi-homogeneous weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedHomogeneousPoly {
    pub poly: Polynomial,
    /// `(w_x, w_y, w_z)`, each in `(0, 1)`.
    pub weights: [Rational; 3],
    /// Least common denominator of the weights.
    pub d: u64,
    /// `(a, b, c) = d * weights`.
    pub abc: [u64; 3],
}

impl WeightedHomogeneousPoly {
    pub fn monomial_order(&self) -> MonomialOrder {
        MonomialOrder { weights: self.abc }
    }

    /// `n(alpha) = sum_i w_i (alpha_i + 1)`.
    pub fn n_alpha(&self, m: &Monomial) -> Rational {
        (0..3)
            .map(|i| &self.weights[i] * Rational::from_integer(BigInt::from(m.0[i] + 1)))
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    /// Standard monomial basis of the Jacobian algebra under the weighted order.
    pub fn jacobian_basis(&self) -> Result<QuotientBasis> {
        jacobian_basis(&self.poly, &self.monomial_order())
    }
}

/// Solves `w . n = 1` over the support of `f`.
pub fn infer_weights(f: &Polynomial) -> Result<WeightedHomogeneousPoly> {
    let support = f.support();
    if support.is_empty() {
        return Err(Error::NotWeightedHomogeneous("zero polynomial".into()));
    }
    // augmented rows [n_x, n_y, n_z | 1]
    let mut rows: Vec<[Rational; 4]> = support
        .iter()
        .map(|m| {
            let e = m.exponents();
            [
                rational::int(e[0] as i64),
                rational::int(e[1] as i64),
                rational::int(e[2] as i64),
                Rational::one(),
            ]
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..3 {
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for j in 0..4 {
                    let sub = &factor * &rows[r][j];
                    rows[i][j] -= sub;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[3].is_zero()) {
        return Err(Error::NotWeightedHomogeneous(format!(
            "support of {f} does not lie on a hyperplane w.n = 1"
        )));
    }
    if pivots.len() < 3 {
        let free: Vec<char> = (0..3)
            .filter(|c| !pivots.contains(c))
            .map(|c| crate::poly::VARIABLES[c])
            .collect();
        return Err(Error::WeightsNotUnique(format!(
            "solutions of w.n = 1 over the support of {f} form a {}-parameter family (free: {})",
            free.len(),
            free.iter().map(char::to_string).collect::<Vec<_>>().join(", ")
        )));
    }
    let weights: [Rational; 3] = std::array::from_fn(|i| rows[i][3].clone());
    if weights.iter().any(|w| !w.is_positive() || *w >= Rational::one()) {
        return Err(Error::NotWeightedHomogeneous(format!(
            "weights ({}) of {f} are not all in (0, 1)",
            weights.iter().map(rational::to_string).collect::<Vec<_>>().join(", ")
        )));
    }
    let d = weights
        .iter()
        .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
    let d = u64::try_from(&d).map_err(|_| Error::usage("weight denominator too large"))?;
    let abc: [u64; 3] = std::array::from_fn(|i| {
        let v = &weights[i] * Rational::from_integer(BigInt::from(d));
        u64::try_from(v.to_integer()).expect("d clears denominators")
    });
    // f(t^a x, t^b y, t^c z) = t^d f: every support monomial has weighted degree d
    if let Some(m) = support.iter().find(|m| m.weighted_degree(&abc) != d) {
        return Err(Error::internal(
            "infer_weights",
            format!("monomial {m} has weighted degree != {d}"),
        ));
    }
    Ok(WeightedHomogeneousPoly {
        poly: f.clone(),
        weights,
        d,
        abc,
    })
}

/// `mu = prod (d - a_i) / a_i`.
pub fn milnor_number_formula(w: &WeightedHomogeneousPoly) -> Result<u64> {
    let d = w.d as i64;
    let mu = w
        .abc
        .iter()
        .map(|&a| rational::rat(d - a as i64, a as i64))
        .fold(Rational::one(), |acc, x| acc * x);
    if !mu.denom().is_one() || !mu.is_positive() {
        return Err(Error::internal(
            "milnor_number_formula",
            format!("product {} is not a positive integer", rational::to_string(&mu)),
        ));
    }
    Ok(u64::try_from(mu.numer()).expect("small Milnor number"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralDatum {
    pub monomial: Monomial,
    pub n_alpha: Rational,
    /// `n_alpha - 1`.
    pub shifted: Rational,
}

pub fn spectral_data(w: &WeightedHomogeneousPoly, basis: &QuotientBasis) -> Vec<SpectralDatum> {
    basis
        .standard_monomials
        .iter()
        .map(|m| {
            let n_alpha = w.n_alpha(m);
            SpectralDatum {
                monomial: *m,
                shifted: &n_alpha - Rational::one(),
                n_alpha,
            }
        })
        .collect()
}

/// Which grading the spectrum reports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Grading {
    /// `n(alpha) - 1`, the usual normalisation with values in `(0, 1)`.
    #[default]
    Shifted,
    /// `n(alpha)` itself.
    Raw,
}

/// Spectral numbers with multiplicities, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralPolynomial {
    pub entries: Vec<(Rational, u64)>,
}

impl SpectralPolynomial {
    pub fn from_values(values: impl IntoIterator<Item = Rational>) -> Self {
        let mut counts: BTreeMap<Rational, u64> = BTreeMap::new();
        for v in values {
            *counts.entry(v).or_default() += 1;
        }
        SpectralPolynomial {
            entries: counts.into_iter().collect(),
        }
    }

    /// Total multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    /// Flattened multiset, ascending.
    pub fn values(&self) -> Vec<Rational> {
        self.entries
            .iter()
            .flat_map(|(l, m)| std::iter::repeat_n(l.clone(), *m as usize))
            .collect()
    }

    /// `{lambda}` equals `{c - lambda}` as multisets.
    pub fn is_symmetric_about(&self, center_sum: &Rational) -> bool {
        let mirrored = SpectralPolynomial::from_values(self.values().into_iter().map(|l| center_sum - l));
        mirrored == *self
    }
}

pub fn spectrum(
    w: &WeightedHomogeneousPoly,
    basis: &QuotientBasis,
    grading: Grading,
) -> Result<SpectralPolynomial> {
    let mu = milnor_number_formula(w)?;
    if basis.len() as u64 != mu {
        return Err(Error::internal(
            "spectrum",
            format!("basis has {} monomials but mu = {mu}", basis.len()),
        ));
    }
    Ok(SpectralPolynomial::from_values(
        spectral_data(w, basis).into_iter().map(|s| match grading {
            Grading::Shifted => s.shifted,
            Grading::Raw => s.n_alpha,
        }),
    ))
}

/// An eigenvalue `exp(2 pi i numerator / denominator)` of the monodromy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RootOfUnity {
    pub numerator: u64,
    pub denominator: u64,
}

/// Monodromy eigenvalues `exp(2 pi i lambda)` with exponents written over `d`.
pub fn monodromy_eigenvalues(sp: &SpectralPolynomial, d: u64) -> Result<Vec<(RootOfUnity, u64)>> {
    let mut out = Vec::new();
    for (lambda, mult) in &sp.entries {
        let f = rational::frac(lambda);
        let den = u64::try_from(f.denom()).unwrap_or(u64::MAX);
        if !d.is_multiple_of(den) {
            return Err(Error::internal(
                "monodromy_eigenvalues",
                format!("denominator of {} does not divide d = {d}", rational::to_string(lambda)),
            ));
        }
        let num = u64::try_from(f.numer()).expect("fractional part is nonnegative") * (d / den);
        out.push((
            RootOfUnity {
                numerator: num,
                denominator: d,
            },
            *mult,
        ));
    }
    Ok(out)
}

/// Decreasing filtration `F^p = {alpha : n(alpha) <= n - p + 1}` for the
/// surface case `n = 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeFiltration {
    pub pieces: BTreeMap<u32, Vec<SpectralDatum>>,
}

pub const SURFACE_DIM: u32 = 2;

impl HodgeFiltration {
    pub fn dim(&self, p: u32) -> usize {
        self.pieces.get(&p).map_or(0, Vec::len)
    }

    /// `dim F^p - dim F^(p+1)` for each `p`.
    pub fn graded_dims(&self) -> BTreeMap<u32, usize> {
        self.pieces
            .keys()
            .map(|&p| (p, self.dim(p) - self.dim(p + 1)))
            .collect()
    }

    pub fn is_decreasing(&self) -> bool {
        self.pieces.iter().all(|(p, piece)| {
            self.pieces
                .get(&(p + 1))
                .is_none_or(|next| next.iter().all(|d| piece.contains(d)))
        })
    }
}

pub fn hodge_filtration(data: &[SpectralDatum]) -> HodgeFiltration {
    let n = SURFACE_DIM as i64;
    let pieces = (0..=SURFACE_DIM + 1)
        .map(|p| {
            let bound = rational::int(n - p as i64 + 1);
            let piece = data.iter().filter(|d| d.n_alpha <= bound).cloned().collect();
            (p, piece)
        })
        .collect();
    HodgeFiltration { pieces }
}

/// Everything computed for one polynomial.
#[derive(Clone, Debug)]
pub struct SpectrumReport {
    pub weighted: WeightedHomogeneousPoly,
    pub mu_formula: u64,
    pub basis: QuotientBasis,
    pub spectrum: SpectralPolynomial,
}

/// Weights, Milnor number (both ways) and spectrum of `f`.
pub fn analyze(f: &Polynomial, grading: Grading) -> Result<SpectrumReport> {
    let weighted = infer_weights(f)?;
    let mu_formula = milnor_number_formula(&weighted)?;
    let basis = weighted.jacobian_basis()?;
    let spectrum = spectrum(&weighted, &basis, grading)?;
    Ok(SpectrumReport {
        weighted,
        mu_formula,
        basis,
        spectrum,
    })
}
