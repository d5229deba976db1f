//! Cartan matrices, Coxeter elements and positive roots of simply laced root systems.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::cyclotomic_polynomial;
use crate::arith::rational::{self, Rational};
use crate::error::{Error, Result};
use crate::quiver::{DynkinDiagram, Graph};

/// Default bound on the order of a Coxeter element.
pub const COXETER_ORDER_BOUND: usize = 60;

pub type IntMatrix = Vec<Vec<i64>>;

pub fn identity_matrix(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![0i64; m]; n];
    for i in 0..n {
        for (k, &aik) in a[i].iter().enumerate() {
            if aik == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

fn is_identity(m: &IntMatrix) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
}

/// `C = 2I - A` for a diagram with adjacency `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: IntMatrix,
}

impl CartanMatrix {
    pub fn from_graph(graph: &Graph) -> Self {
        let entries = graph
            .adjacency()
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &a)| if i == j { 2 } else { -i64::from(a) })
                    .collect()
            })
            .collect();
        CartanMatrix { entries }
    }

    pub fn from_diagram(diagram: &DynkinDiagram) -> Self {
        Self::from_graph(&diagram.graph)
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Leading principal minors, computed by fraction-free elimination.
    pub fn leading_minors(&self) -> Vec<BigInt> {
        let n = self.rank();
        let mut m: Vec<Vec<BigInt>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let mut minors = Vec::with_capacity(n);
        let mut prev = BigInt::one();
        for k in 0..n {
            let pivot = m[k][k].clone();
            minors.push(pivot.clone());
            if pivot.is_zero() {
                // no row swaps: a zero leading minor already settles definiteness
                minors.extend(std::iter::repeat_n(BigInt::zero(), n - k - 1));
                break;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (&pivot * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                }
            }
            prev = pivot;
        }
        minors
    }

    /// Sylvester's criterion.
    pub fn is_positive_definite(&self) -> bool {
        self.leading_minors().iter().all(|d| *d > BigInt::zero())
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `v^T C v`.
    pub fn quadratic_form(&self, v: &[i64]) -> i64 {
        self.apply(v).iter().zip(v).map(|(a, b)| a * b).sum()
    }
}

/// `S_i`: identity with row `i` replaced by `e_i - C_{i,*}`, acting on
/// column vectors of simple-root coordinates.
pub fn simple_reflections(c: &CartanMatrix) -> Vec<IntMatrix> {
    let n = c.rank();
    (0..n)
        .map(|i| {
            let mut s = identity_matrix(n);
            for j in 0..n {
                s[i][j] = i64::from(i == j) - c.entries[i][j];
            }
            s
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterElement {
    pub matrix: IntMatrix,
    pub order: usize,
    pub vertex_order: Vec<usize>,
}

impl CoxeterElement {
    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn pow(&self, mut e: u64) -> IntMatrix {
        let mut base = self.matrix.clone();
        let mut acc = identity_matrix(self.rank());
        while e > 0 {
            if e & 1 == 1 {
                acc = mat_mul(&acc, &base);
            }
            base = mat_mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn pow_is_identity(&self, e: u64) -> bool {
        is_identity(&self.pow(e))
    }

    pub fn determinant(&self) -> BigInt {
        let cp = characteristic_polynomial(&self.matrix);
        // det = (-1)^n * constant term
        if self.rank().is_multiple_of(2) {
            cp[0].clone()
        } else {
            -cp[0].clone()
        }
    }
}

fn order_bound(rank: usize) -> usize {
    COXETER_ORDER_BOUND.max(2 * rank)
}

/// Product `S_{o_0} S_{o_1} ... S_{o_{n-1}}`; the default order is the
/// diagram's vertex order.
pub fn coxeter_element(diagram: &DynkinDiagram, vertex_order: Option<&[usize]>) -> Result<CoxeterElement> {
    if diagram.extended {
        return Err(Error::usage("Coxeter elements are defined for plain diagrams only"));
    }
    let c = CartanMatrix::from_diagram(diagram);
    let n = c.rank();
    let order: Vec<usize> = match vertex_order {
        Some(o) => o.to_vec(),
        None => (0..n).collect(),
    };
    let mut sorted = order.clone();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(Error::usage(format!(
            "vertex order {order:?} is not a permutation of 0..{n}"
        )));
    }
    let refl = simple_reflections(&c);
    let matrix = order
        .iter()
        .fold(identity_matrix(n), |acc, &i| mat_mul(&acc, &refl[i]));
    let bound = order_bound(n);
    let mut power = matrix.clone();
    let mut h = 1;
    while !is_identity(&power) {
        h += 1;
        if h > bound {
            return Err(Error::internal(
                "coxeter_element",
                format!("order of the Coxeter element of {} exceeds {bound}", diagram.ade),
            ));
        }
        power = mat_mul(&power, &matrix);
    }
    Ok(CoxeterElement {
        matrix,
        order: h,
        vertex_order: order,
    })
}

/// `det(tI - M)` as coefficients in ascending degree, via Faddeev-LeVerrier.
pub fn characteristic_polynomial(m: &IntMatrix) -> Vec<BigInt> {
    let n = m.len();
    let a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
    let mut mk: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for l in 0..n {
                if a[i][l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !mk[l][j].is_zero() {
                        next[i][j] += &a[i][l] * &mk[l][j];
                    }
                }
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        mk = next;
        let mut tr = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &a[i][l] * &mk[l][i];
            }
        }
        coeffs[n - k] = -tr / BigInt::from(k);
    }
    coeffs
}

/// Divides `p` by a monic `q` if the remainder vanishes.
fn exact_divide(p: &[BigInt], q: &[i64]) -> Option<Vec<BigInt>> {
    let dq = q.len() - 1;
    if p.len() <= dq {
        return None;
    }
    let mut r = p.to_vec();
    let mut quot = vec![BigInt::zero(); p.len() - dq];
    for i in (0..quot.len()).rev() {
        let lead = r[i + dq].clone();
        if lead.is_zero() {
            continue;
        }
        for (j, &qj) in q.iter().enumerate() {
            r[i + j] -= &lead * qj;
        }
        quot[i] = lead;
    }
    r.iter().all(Zero::is_zero).then_some(quot)
}

/// Cyclotomic factorisation `{k: multiplicity of Phi_k}` over divisors of the order.
pub fn cyclotomic_factorization(t: &CoxeterElement) -> Result<BTreeMap<u32, u32>> {
    let mut p = characteristic_polynomial(&t.matrix);
    let h = t.order as u32;
    let mut factors = BTreeMap::new();
    for k in (1..=h).filter(|k| h.is_multiple_of(*k)) {
        let phi = cyclotomic_polynomial(k);
        while let Some(q) = exact_divide(&p, &phi) {
            p = q;
            *factors.entry(k).or_insert(0) += 1;
        }
    }
    if p.len() != 1 || !p[0].is_one() {
        return Err(Error::internal(
            "coxeter_exponents",
            format!("characteristic polynomial has a non-cyclotomic factor of degree {}", p.len() - 1),
        ));
    }
    Ok(factors)
}

/// Exponents `m_j / h`, ascending with multiplicity.
pub fn coxeter_exponents(t: &CoxeterElement) -> Result<Vec<Rational>> {
    let mut out = Vec::with_capacity(t.rank());
    for (k, mult) in cyclotomic_factorization(t)? {
        for j in (0..k).filter(|&j| num_integer::gcd(j, k) == 1) {
            for _ in 0..mult {
                out.push(rational::rat(j as i64, k as i64));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Positive roots in simple-root coordinates, by closure of the simple
/// roots under the simple reflections; sorted by height, then lexicographically.
pub fn positive_roots(c: &CartanMatrix) -> Vec<Vec<i64>> {
    let n = c.rank();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(v) = queue.pop_front() {
        let cv = c.apply(&v);
        for i in 0..n {
            if cv[i] == 0 {
                continue;
            }
            let mut w = v.clone();
            w[i] -= cv[i];
            if w.iter().all(|&x| x >= 0) && w.iter().any(|&x| x > 0) && seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    let ordered: BTreeSet<(i64, Vec<i64>)> = seen
        .into_iter()
        .map(|v| (v.iter().sum(), v))
        .collect();
    ordered.into_iter().map(|(_, v)| v).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ade::AdeType;
    use crate::arith::rational::rat;

    fn reference(s: &str) -> DynkinDiagram {
        DynkinDiagram::reference(s.parse::<AdeType>().unwrap())
    }

    fn over(nums: &[i64], den: i64) -> Vec<Rational> {
        let mut v: Vec<Rational> = nums.iter().map(|&n| rat(n, den)).collect();
        v.sort();
        v
    }

    #[test]
    fn reflections() {
        let a1 = CartanMatrix::from_diagram(&reference("A1"));
        assert_eq!(simple_reflections(&a1), vec![vec![vec![-1]]]);
        let a2 = CartanMatrix::from_diagram(&reference("A2"));
        let s = simple_reflections(&a2);
        assert_eq!(s[0], vec![vec![-1, 1], vec![0, 1]]);
        for t in ["A5", "D6", "E8"] {
            let c = CartanMatrix::from_diagram(&reference(t));
            for s in simple_reflections(&c) {
                assert!(is_identity(&mat_mul(&s, &s)));
            }
        }
    }

    #[test]
    fn cartan_definiteness() {
        for t in ["A1", "A7", "D4", "D9", "E6", "E7", "E8"] {
            let c = CartanMatrix::from_diagram(&reference(t));
            assert!(c.is_symmetric());
            assert!(c.is_positive_definite(), "{t}");
        }
        let ext = DynkinDiagram::extended("E8".parse().unwrap());
        let c = CartanMatrix::from_diagram(&ext);
        assert!(!c.is_positive_definite());
        let marks: Vec<i64> = ext.marks().iter().map(|&m| m as i64).collect();
        assert!(c.apply(&marks).iter().all(|&x| x == 0));
        // determinants: A_n -> n+1, D_n -> 4, E8 -> 1
        let det = |t: &str| CartanMatrix::from_diagram(&reference(t)).leading_minors().last().cloned().unwrap();
        assert_eq!(det("A6"), BigInt::from(7));
        assert_eq!(det("D7"), BigInt::from(4));
        assert_eq!(det("E6"), BigInt::from(3));
        assert_eq!(det("E8"), BigInt::from(1));
    }

    #[test]
    fn coxeter_orders() {
        let a1 = coxeter_element(&reference("A1"), None).unwrap();
        assert_eq!((a1.matrix.clone(), a1.order), (vec![vec![-1]], 2));
        assert_eq!(coxeter_element(&reference("A2"), None).unwrap().order, 3);
        assert_eq!(coxeter_element(&reference("E8"), None).unwrap().order, 30);
        for t in ["A4", "D5", "E6", "E7"] {
            let d = reference(t);
            let c = coxeter_element(&d, None).unwrap();
            assert_eq!(c.order as u64, d.ade.coxeter_number(), "{t}");
            assert!(c.pow_is_identity(c.order as u64));
            assert!((1..c.order as u64).all(|k| !c.pow_is_identity(k)));
            assert_eq!(c.determinant().magnitude(), &num_bigint::BigUint::from(1u32));
        }
        // large D ranks need more than the default bound
        assert_eq!(coxeter_element(&reference("D35"), None).unwrap().order, 68);
    }

    #[test]
    fn coxeter_rejects_bad_input() {
        let ext = DynkinDiagram::extended("A3".parse().unwrap());
        assert!(matches!(coxeter_element(&ext, None), Err(Error::Usage(_))));
        assert!(matches!(coxeter_element(&reference("A3"), Some(&[0, 0, 1])), Err(Error::Usage(_))));
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(
            characteristic_polynomial(&vec![vec![2, 1], vec![1, 2]]),
            vec![BigInt::from(3), BigInt::from(-4), BigInt::from(1)]
        );
        let a2 = coxeter_element(&reference("A2"), None).unwrap();
        assert_eq!(
            characteristic_polynomial(&a2.matrix),
            vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)]
        );
    }

    #[test]
    fn exponents_examples() {
        let ex = |t: &str| coxeter_exponents(&coxeter_element(&reference(t), None).unwrap()).unwrap();
        assert_eq!(ex("A2"), over(&[1, 2], 3));
        assert_eq!(ex("D4"), over(&[1, 3, 3, 5], 6));
        assert_eq!(ex("E6"), over(&[1, 4, 5, 7, 8, 11], 12));
        assert_eq!(ex("E7"), over(&[1, 5, 7, 9, 11, 13, 17], 18));
        assert_eq!(ex("E8"), over(&[1, 7, 11, 13, 17, 19, 23, 29], 30));
        for t in ["A9", "D8", "E7"] {
            let e = ex(t);
            let mirrored: Vec<Rational> = e.iter().rev().map(|x| Rational::one() - x).collect();
            assert_eq!(e, mirrored);
        }
    }

    #[test]
    fn root_counts() {
        let count = |t: &str| positive_roots(&CartanMatrix::from_diagram(&reference(t))).len();
        assert_eq!(count("A1"), 1);
        assert_eq!(count("A3"), 6);
        assert_eq!(count("A8"), 36);
        assert_eq!(count("D4"), 12);
        assert_eq!(count("D7"), 42);
        assert_eq!(count("E6"), 36);
        assert_eq!(count("E7"), 63);
        assert_eq!(count("E8"), 120);
        let c = CartanMatrix::from_diagram(&reference("E8"));
        let roots = positive_roots(&c);
        assert!(roots.iter().all(|v| c.quadratic_form(v) == 2));
        // highest root carries the marks
        let marks: Vec<i64> = reference("E8").marks().iter().map(|&m| m as i64).collect();
        assert_eq!(roots.last().unwrap(), &marks);
    }
}
