//! Exact character tables by the Burnside-Dixon method.
//!
//! The class sums of the group algebra span a commutative algebra whose
//! simultaneous eigenvectors are the central characters. Eigenspaces are
//! split over a prime field F_p with `p = 1 (mod exponent)`; the resulting
//! character values mod p are lifted to Q(zeta_e) by recovering the
//! eigenvalue multiplicities of each class representative from its power
//! map.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{CyclotomicNumber, Rational};
use crate::error::{Error, Result};
use crate::group::{class_index_map, conjugacy_classes, exponent, ConjugacyClass, FiniteSubgroup};
use crate::modp;

/// Number of primes tried before giving up on the eigenspace splitting.
pub const MAX_PRIME_ATTEMPTS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Irrep {
    pub dimension: u32,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    classes: Vec<ConjugacyClass>,
    irreps: Vec<Irrep>,
    /// `values[irrep][class]`, all of order `exponent`.
    values: Vec<Vec<CyclotomicNumber>>,
    group_order: usize,
    exponent: u32,
    prime: u64,
}

impl CharacterTable {
    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn irreps(&self) -> &[Irrep] {
        &self.irreps
    }

    pub fn values(&self) -> &[Vec<CyclotomicNumber>] {
        &self.values
    }

    pub fn value(&self, irrep: usize, class: usize) -> &CyclotomicNumber {
        &self.values[irrep][class]
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// Exponent of the group; character values live in Q(zeta_exponent).
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// The prime over which the class algebra was split.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn dimensions(&self) -> Vec<u32> {
        self.irreps.iter().map(|r| r.dimension).collect()
    }

    /// Index of the trivial character. Always 0 by construction.
    pub fn trivial_index(&self) -> usize {
        0
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.irreps.iter().map(|r| (r.dimension as u64).pow(2)).sum()
    }

    fn conjugate_values(&self) -> Vec<Vec<CyclotomicNumber>> {
        self.values
            .iter()
            .map(|row| row.iter().map(CyclotomicNumber::conj).collect())
            .collect()
    }

    fn class_sizes(&self) -> Vec<i64> {
        self.classes.iter().map(|c| c.size as i64).collect()
    }

    /// Row orthogonality, checked exactly.
    pub fn row_orthogonality(&self) -> bool {
        let g = CyclotomicNumber::from_i64(self.exponent, self.group_order as i64);
        let zero = CyclotomicNumber::zero(self.exponent);
        let conj = self.conjugate_values();
        let sizes = self.class_sizes();
        (0..self.values.len()).all(|a| {
            (0..self.values.len()).all(|b| {
                let ip = CyclotomicNumber::weighted_dot(&sizes, &self.values[a], &conj[b]);
                ip.value_eq(if a == b { &g } else { &zero })
            })
        })
    }

    /// Column orthogonality, checked exactly.
    pub fn column_orthogonality(&self) -> bool {
        let r = self.classes.len();
        let conj = self.conjugate_values();
        let ones = vec![1i64; self.values.len()];
        (0..r).all(|c| {
            let col: Vec<CyclotomicNumber> = self.values.iter().map(|row| row[c].clone()).collect();
            (0..r).all(|d| {
                let ccol: Vec<CyclotomicNumber> = conj.iter().map(|row| row[d].clone()).collect();
                let acc = CyclotomicNumber::weighted_dot(&ones, &col, &ccol);
                let expected = if c == d {
                    Rational::new(
                        BigInt::from(self.group_order),
                        BigInt::from(self.classes[c].size),
                    )
                } else {
                    Rational::zero()
                };
                acc.to_rational() == Some(expected)
            })
        })
    }

    /// Character values are algebraic integers: every power-basis
    /// coefficient is integral.
    pub fn values_integral(&self) -> bool {
        self.values.iter().flatten().all(CyclotomicNumber::has_integral_coeffs)
    }
}

/// The character of the defining two-dimensional representation.
pub fn standard_character(classes: &[ConjugacyClass]) -> Vec<CyclotomicNumber> {
    classes.iter().map(|c| c.trace.clone()).collect()
}

/// Class multiplication coefficients `c[i][j][k]`: the number of pairs
/// `(x, y)` with `x` in class `i`, `y` in class `j` and `xy` equal to the
/// representative of class `k`.
pub fn class_multiplication_coefficients(
    group: &FiniteSubgroup,
    classes: &[ConjugacyClass],
) -> Result<Vec<Vec<Vec<u64>>>> {
    let r = classes.len();
    let class_of = class_index_map(group, classes);
    let inverses: Vec<usize> = (0..group.order())
        .map(|i| group.inverse_index(i))
        .collect::<Result<_>>()?;
    let mut c = vec![vec![vec![0u64; r]; r]; r];
    for (k, class) in classes.iter().enumerate() {
        let rep = group
            .index_of(&class.representative)
            .ok_or_else(|| Error::internal("class_coefficients", "representative not in group"))?;
        for (i, ci) in classes.iter().enumerate() {
            for &x in &ci.members {
                let y = group.mul_index(inverses[x], rep)?;
                c[i][class_of[y]][k] += 1;
            }
        }
    }
    Ok(c)
}

fn admissible_primes(order: u64, exponent: u64) -> impl Iterator<Item = u64> {
    let start = 2 * order + 1;
    // first p >= start with p = 1 mod exponent
    let first = start + (exponent - (start - 1) % exponent) % exponent;
    (0..)
        .map(move |i| first + i * exponent)
        .filter(|&p| modp::is_prime(p))
}

/// Splits F_p^r into simultaneous eigenspaces of the class matrices.
/// Returns one spanning vector per eigenspace, or `None` if some eigenspace
/// stays higher-dimensional or a class matrix fails to diagonalize.
fn split_class_algebra(coeffs: &[Vec<Vec<u64>>], p: u64) -> Option<Vec<Vec<u64>>> {
    let r = coeffs.len();
    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![identity];
    for m in coeffs.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let apply = |v: &[u64]| -> Vec<u64> {
            (0..r)
                .map(|j| (0..r).fold(0u64, |acc, k| (acc + (m[j][k] % p) * v[k]) % p))
                .collect()
        };
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let (basis, pivots) = modp::rref(space, p);
            let k = basis.len();
            // restricted action: column i holds M b_i in basis coordinates
            let images: Vec<Vec<u64>> = basis.iter().map(|b| apply(b)).collect();
            let mut found = 0;
            for lambda in 0..p {
                let shifted: Vec<Vec<u64>> = (0..k)
                    .map(|row| {
                        (0..k)
                            .map(|col| {
                                let x = images[col][pivots[row]];
                                if row == col {
                                    (x + p - lambda) % p
                                } else {
                                    x
                                }
                            })
                            .collect()
                    })
                    .collect();
                let ker = modp::kernel(&shifted, p);
                if ker.is_empty() {
                    continue;
                }
                found += ker.len();
                let vectors = ker
                    .iter()
                    .map(|c| {
                        (0..r)
                            .map(|j| {
                                c.iter()
                                    .zip(&basis)
                                    .fold(0u64, |acc, (ci, b)| (acc + ci * b[j]) % p)
                            })
                            .collect()
                    })
                    .collect();
                next.push(vectors);
                if found == k {
                    break;
                }
            }
            if found != k {
                return None;
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return None;
    }
    Some(spaces.into_iter().map(|mut s| s.pop().expect("one vector")).collect())
}

struct ClassData {
    sizes: Vec<u64>,
    orders: Vec<u64>,
    inverse_class: Vec<usize>,
    /// `power_map[k][l]` is the class of `rep_k^l` for `l < order_k`.
    power_map: Vec<Vec<usize>>,
}

fn class_data(group: &FiniteSubgroup, classes: &[ConjugacyClass]) -> Result<ClassData> {
    let class_of = class_index_map(group, classes);
    let lookup = |g: &crate::group::GroupElement| {
        group
            .index_of(g)
            .map(|i| class_of[i])
            .ok_or_else(|| Error::internal("class_data", "power escaped the group"))
    };
    let mut inverse_class = Vec::new();
    let mut power_map = Vec::new();
    for c in classes {
        inverse_class.push(lookup(&c.representative.inverse())?);
        let mut powers = Vec::with_capacity(c.element_order);
        let mut acc = group.identity().clone();
        for _ in 0..c.element_order {
            powers.push(lookup(&acc)?);
            acc = acc.mul(&c.representative);
        }
        power_map.push(powers);
    }
    Ok(ClassData {
        sizes: classes.iter().map(|c| c.size as u64).collect(),
        orders: classes.iter().map(|c| c.element_order as u64).collect(),
        inverse_class,
        power_map,
    })
}

fn table_mod_p(
    coeffs: &[Vec<Vec<u64>>],
    data: &ClassData,
    group_order: u64,
    exponent: u64,
    p: u64,
) -> Option<Vec<(u32, Vec<CyclotomicNumber>)>> {
    let vectors = split_class_algebra(coeffs, p)?;
    let r = coeffs.len();
    let root = modp::pow_mod(modp::primitive_root(p), (p - 1) / exponent, p);
    let mut rows = Vec::with_capacity(r);
    for v in vectors {
        if v[0] == 0 {
            return None;
        }
        let inv0 = modp::inv_mod(v[0], p);
        let w: Vec<u64> = v.iter().map(|x| x * inv0 % p).collect();
        let s = (0..r).fold(0u64, |acc, k| {
            let t = w[k] * w[data.inverse_class[k]] % p * modp::inv_mod(data.sizes[k] % p, p) % p;
            (acc + t) % p
        });
        if s == 0 {
            return None;
        }
        let deg_sq = group_order % p * modp::inv_mod(s, p) % p;
        let dim = (1..=group_order).take_while(|d| d * d <= group_order).find(|d| d * d % p == deg_sq)?;
        let theta: Vec<u64> = (0..r)
            .map(|k| w[k] * dim % p * modp::inv_mod(data.sizes[k] % p, p) % p)
            .collect();
        let mut values = Vec::with_capacity(r);
        for k in 0..r {
            let o = data.orders[k];
            let z = modp::pow_mod(root, exponent / o, p);
            let o_inv = modp::inv_mod(o % p, p);
            let zpow: Vec<u64> = (0..o).map(|t| modp::pow_mod(z, t, p)).collect();
            let mut coeffs_e = vec![Rational::zero(); exponent as usize];
            let mut total = 0u64;
            for j in 0..o {
                let mut m = 0u64;
                for l in 0..o {
                    let t = (o - (j * l) % o) % o;
                    m = (m + theta[data.power_map[k][l as usize]] * zpow[t as usize]) % p;
                }
                m = m * o_inv % p;
                if m > dim {
                    return None;
                }
                total += m;
                coeffs_e[(j * (exponent / o)) as usize] += Rational::from_integer(BigInt::from(m));
            }
            if total != dim {
                return None;
            }
            values.push(CyclotomicNumber::from_coeffs(exponent as u32, coeffs_e));
        }
        rows.push((dim as u32, values));
    }
    Some(rows)
}

/// Computes the exact character table of `group`.
pub fn character_table(group: &FiniteSubgroup) -> Result<CharacterTable> {
    let classes = conjugacy_classes(group)?;
    character_table_with_classes(group, classes)
}

pub fn character_table_with_classes(
    group: &FiniteSubgroup,
    classes: Vec<ConjugacyClass>,
) -> Result<CharacterTable> {
    let coeffs = class_multiplication_coefficients(group, &classes)?;
    let data = class_data(group, &classes)?;
    let e = exponent(&classes);
    let order = group.order() as u64;
    for p in admissible_primes(order, e).take(MAX_PRIME_ATTEMPTS) {
        let Some(mut rows) = table_mod_p(&coeffs, &data, order, e, p) else {
            continue;
        };
        let one = CyclotomicNumber::one(e as u32);
        rows.sort_by(|(da, va), (db, vb)| {
            let ta = !va.iter().all(|x| *x == one);
            let tb = !vb.iter().all(|x| *x == one);
            (da, ta, va).cmp(&(db, tb, vb))
        });
        let table = CharacterTable {
            irreps: rows.iter().map(|(d, _)| Irrep { dimension: *d }).collect(),
            values: rows.into_iter().map(|(_, v)| v).collect(),
            classes,
            group_order: group.order(),
            exponent: e as u32,
            prime: p,
        };
        if table.sum_of_squares() != order {
            return Err(Error::internal(
                "character_table",
                format!("sum of squared degrees {} != {}", table.sum_of_squares(), order),
            ));
        }
        if !table.row_orthogonality() {
            return Err(Error::internal("character_table", "row orthogonality fails"));
        }
        return Ok(table);
    }
    Err(Error::internal(
        "character_table",
        format!("class algebra did not split over {MAX_PRIME_ATTEMPTS} primes"),
    ))
}

/// Multiplicity of irrep `alpha` in `V (x) V_beta` where `V` is the class
/// function `standard`.
pub fn tensor_multiplicity(
    table: &CharacterTable,
    standard: &[CyclotomicNumber],
    alpha: usize,
    beta: usize,
) -> Result<u64> {
    let weighted = weighted_products(table, standard, beta);
    let conj: Vec<CyclotomicNumber> = table.values()[alpha].iter().map(CyclotomicNumber::conj).collect();
    multiplicity_from(table, &weighted, &conj, alpha, beta)
}

/// `V(c) chi_beta(c)` for each class.
fn weighted_products(table: &CharacterTable, standard: &[CyclotomicNumber], beta: usize) -> Vec<CyclotomicNumber> {
    (0..table.classes().len())
        .map(|c| &standard[c] * table.value(beta, c))
        .collect()
}

fn multiplicity_from(
    table: &CharacterTable,
    weighted: &[CyclotomicNumber],
    alpha_conj: &[CyclotomicNumber],
    alpha: usize,
    beta: usize,
) -> Result<u64> {
    let acc = CyclotomicNumber::weighted_dot(&table.class_sizes(), weighted, alpha_conj);
    let q = acc
        .to_rational()
        .map(|q| q / Rational::from_integer(BigInt::from(table.group_order())));
    match q {
        Some(q) if q.denom().is_one() && q >= Rational::zero() => {
            Ok(u64::try_from(q.numer()).expect("small multiplicity"))
        }
        _ => Err(Error::internal(
            "tensor_multiplicity",
            format!("multiplicity a[{alpha}][{beta}] is not a nonnegative integer"),
        )),
    }
}

/// The full matrix `a[alpha][beta]` of tensor multiplicities.
pub fn tensor_matrix(table: &CharacterTable, standard: &[CyclotomicNumber]) -> Result<Vec<Vec<u64>>> {
    let r = table.irreps().len();
    let conj = table.conjugate_values();
    let weighted: Vec<Vec<CyclotomicNumber>> = (0..r).map(|b| weighted_products(table, standard, b)).collect();
    (0..r)
        .map(|a| (0..r).map(|b| multiplicity_from(table, &weighted[b], &conj[a], a, b)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ade::AdeType;
    use crate::group::build_group;

    #[test]
    fn coefficients_identity_class_absorbs() {
        let g = build_group(AdeType::d(5).unwrap()).unwrap();
        let cl = conjugacy_classes(&g).unwrap();
        let c = class_multiplication_coefficients(&g, &cl).unwrap();
        for j in 0..cl.len() {
            for k in 0..cl.len() {
                // x = I forces y = rep_k, so the count is 1 exactly when j = k
                assert_eq!(c[0][j][k], u64::from(j == k));
                assert_eq!(c[j][0][k], u64::from(j == k));
            }
        }
    }

    #[test]
    fn coefficients_sign_group() {
        let g = build_group(AdeType::a(1).unwrap()).unwrap();
        let cl = conjugacy_classes(&g).unwrap();
        let c = class_multiplication_coefficients(&g, &cl).unwrap();
        assert_eq!(c[1][1][0], 1);
        assert_eq!(c[1][1][1], 0);
    }

    #[test]
    fn coefficients_quaternion_by_brute_force() {
        let g = build_group(AdeType::d(4).unwrap()).unwrap();
        let cl = conjugacy_classes(&g).unwrap();
        let c = class_multiplication_coefficients(&g, &cl).unwrap();
        let class_of = class_index_map(&g, &cl);
        // independent double loop over all pairs
        let r = cl.len();
        let mut brute = vec![vec![vec![0u64; r]; r]; r];
        for x in 0..g.order() {
            for y in 0..g.order() {
                let xy = g.mul_index(x, y).unwrap();
                for (k, class) in cl.iter().enumerate() {
                    if g.elements()[xy] == class.representative {
                        brute[class_of[x]][class_of[y]][k] += 1;
                    }
                }
            }
        }
        assert_eq!(c, brute);
        // the three order-4 classes {+-i}, {+-j}, {+-k}: i-class * j-class hits the k-class twice
        let order4: Vec<usize> = (0..r).filter(|&k| cl[k].element_order == 4).collect();
        assert_eq!(order4.len(), 3);
        for &a in &order4 {
            for &b in &order4 {
                if a != b {
                    let third = order4.iter().find(|&&k| k != a && k != b).unwrap();
                    assert_eq!(c[a][b][*third], 2);
                }
            }
        }
    }

    #[test]
    fn sign_group_table() {
        let g = build_group(AdeType::a(1).unwrap()).unwrap();
        let t = character_table(&g).unwrap();
        let vals: Vec<Vec<String>> = t
            .values()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        assert_eq!(vals, vec![vec!["1", "1"], vec!["1", "-1"]]);
    }

    #[test]
    fn abelian_tables_are_linear() {
        for n in 1..=8 {
            let g = build_group(AdeType::a(n).unwrap()).unwrap();
            let t = character_table(&g).unwrap();
            assert_eq!(t.irreps().len(), n as usize + 1);
            assert!(t.dimensions().iter().all(|&d| d == 1));
            assert!(t.column_orthogonality());
        }
    }

    #[test]
    fn e8_dimensions() {
        let g = build_group(AdeType::e8()).unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.dimensions(), vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
        assert_eq!(t.sum_of_squares(), 120);
        assert!(t.row_orthogonality());
        assert!(t.column_orthogonality());
        assert!(t.values_integral());
    }

    #[test]
    fn tensor_multiplicities_small() {
        let g = build_group(AdeType::a(1).unwrap()).unwrap();
        let t = character_table(&g).unwrap();
        let v = standard_character(t.classes());
        assert_eq!(tensor_multiplicity(&t, &v, 0, 1).unwrap(), 2);
        assert_eq!(tensor_multiplicity(&t, &v, 1, 0).unwrap(), 2);
        assert_eq!(tensor_multiplicity(&t, &v, 0, 0).unwrap(), 0);

        // Z/3: V = chi^1 + chi^2, so every pair of distinct characters is joined once
        let g = build_group(AdeType::a(2).unwrap()).unwrap();
        let t = character_table(&g).unwrap();
        let v = standard_character(t.classes());
        let a = tensor_matrix(&t, &v).unwrap();
        assert_eq!(a, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
    }

    #[test]
    fn broken_standard_character_is_reported() {
        let g = build_group(AdeType::a(2).unwrap()).unwrap();
        let t = character_table(&g).unwrap();
        let mut v = standard_character(t.classes());
        v[1] = CyclotomicNumber::from_i64(3, 1);
        let err = tensor_multiplicity(&t, &v, 0, 0).unwrap_err();
        assert!(matches!(err, Error::Internal { .. }));
    }
}
