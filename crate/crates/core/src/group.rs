//! Binary polyhedral groups as exact 2x2 matrix groups over cyclotomic fields.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::ade::{AdeType, Family};
use crate::arith::rational::rat;
use crate::arith::CyclotomicNumber;
use crate::error::{Error, Result};

/// Closure is aborted beyond this many elements.
pub const CLOSURE_BOUND: usize = 1000;

type Cyc = CyclotomicNumber;

/// A 2x2 matrix over Q(zeta_N), row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    entries: [[Cyc; 2]; 2],
}

impl GroupElement {
    pub fn new(entries: [[Cyc; 2]; 2]) -> Self {
        let n = entries[0][0].order();
        debug_assert!(entries.iter().flatten().all(|e| e.order() == n));
        GroupElement { entries }
    }

    pub fn identity(order: u32) -> Self {
        Self::diag(Cyc::one(order), Cyc::one(order))
    }

    pub fn diag(a: Cyc, d: Cyc) -> Self {
        let n = a.order();
        GroupElement::new([[a, Cyc::zero(n)], [Cyc::zero(n), d]])
    }

    pub fn entries(&self) -> &[[Cyc; 2]; 2] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &Cyc {
        &self.entries[row][col]
    }

    pub fn cyclotomic_order(&self) -> u32 {
        self.entries[0][0].order()
    }

    pub fn mul(&self, rhs: &GroupElement) -> GroupElement {
        let a = &self.entries;
        let b = &rhs.entries;
        let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        GroupElement::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn det(&self) -> Cyc {
        let a = &self.entries;
        &(&a[0][0] * &a[1][1]) - &(&a[0][1] * &a[1][0])
    }

    pub fn trace(&self) -> Cyc {
        &self.entries[0][0] + &self.entries[1][1]
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse(&self) -> GroupElement {
        let a = &self.entries;
        GroupElement::new([
            [a[1][1].clone(), -&a[0][1]],
            [-&a[1][0], a[0][0].clone()],
        ])
    }

    pub fn is_identity(&self) -> bool {
        let a = &self.entries;
        a[0][0].is_one() && a[1][1].is_one() && a[0][1].is_zero() && a[1][0].is_zero()
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries[0][1].is_zero() && self.entries[1][0].is_zero()
    }

    pub fn pow(&self, e: u64) -> GroupElement {
        let mut acc = GroupElement::identity(self.cyclotomic_order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = &self.entries;
        write!(f, "[[{}, {}], [{}, {}]]", a[0][0], a[0][1], a[1][0], a[1][1])
    }
}

/// Smallest `m >= 1` with `g^m = I`, searched up to `bound`.
pub fn element_order(g: &GroupElement, bound: usize) -> Result<usize> {
    let mut acc = g.clone();
    for m in 1..=bound {
        if acc.is_identity() {
            return Ok(m);
        }
        acc = acc.mul(g);
    }
    Err(Error::internal(
        "element_order",
        format!("order of {g} exceeds {bound}"),
    ))
}

/// A fully enumerated finite subgroup of SL(2, C).
#[derive(Clone, Debug)]
pub struct FiniteSubgroup {
    ade: AdeType,
    cyclotomic_order: u32,
    generators: Vec<GroupElement>,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
}

impl FiniteSubgroup {
    pub fn ade(&self) -> AdeType {
        self.ade
    }

    pub fn family(&self) -> Family {
        self.ade.family()
    }

    pub fn rank(&self) -> u32 {
        self.ade.rank()
    }

    pub fn cyclotomic_order(&self) -> u32 {
        self.cyclotomic_order
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    /// Elements in breadth-first discovery order; index 0 is the identity.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.index.contains_key(g)
    }

    pub fn identity(&self) -> &GroupElement {
        &self.elements[0]
    }

    pub fn element_order_of(&self, g: &GroupElement) -> Result<usize> {
        element_order(g, self.order())
    }

    /// Product of two elements given by index.
    pub fn mul_index(&self, i: usize, j: usize) -> Result<usize> {
        let p = self.elements[i].mul(&self.elements[j]);
        self.index_of(&p).ok_or_else(|| {
            Error::internal("group_closure", format!("product {p} escaped the group"))
        })
    }

    pub fn inverse_index(&self, i: usize) -> Result<usize> {
        let inv = self.elements[i].inverse();
        self.index_of(&inv).ok_or_else(|| {
            Error::internal("group_closure", format!("inverse {inv} escaped the group"))
        })
    }
}

fn generators_for(ade: AdeType) -> (u32, Vec<GroupElement>) {
    let z = Cyc::zeta_pow;
    let i64c = Cyc::from_i64;
    match ade.family() {
        Family::A => {
            let n = ade.rank() + 1;
            (n, vec![GroupElement::diag(z(n, 1), z(n, -1))])
        }
        Family::D => {
            let n = 2 * (ade.rank() - 2);
            let a = GroupElement::diag(z(n, 1), z(n, -1));
            let b = GroupElement::new([[i64c(n, 0), i64c(n, 1)], [i64c(n, -1), i64c(n, 0)]]);
            (n, vec![a, b])
        }
        Family::E6 | Family::E7 => {
            let n = if ade.family() == Family::E6 { 4 } else { 8 };
            let i = z(n, n as i64 / 4);
            let one = Cyc::one(n);
            let half = rat(1, 2);
            let qi = GroupElement::diag(i.clone(), -&i);
            let qj = GroupElement::new([[i64c(n, 0), i64c(n, 1)], [i64c(n, -1), i64c(n, 0)]]);
            // (1 + i + j + k) / 2
            let one_plus_i = &one + &i;
            let minus_one_plus_i = &i - &one;
            let one_minus_i = &one - &i;
            let w = GroupElement::new([
                [one_plus_i.scale(&half), one_plus_i.scale(&half)],
                [minus_one_plus_i.scale(&half), one_minus_i.scale(&half)],
            ]);
            let mut gens = vec![qi, qj, w];
            if ade.family() == Family::E7 {
                gens.push(GroupElement::diag(z(8, 1), z(8, -1)));
            }
            (n, gens)
        }
        Family::E8 => {
            let n = 5;
            let s = GroupElement::diag(-z(n, 3), -z(n, 2));
            // 1/sqrt(5) = (2(z + z^4) + 1) / 5
            let sqrt5 = &(&z(n, 1) + &z(n, 4)).scale(&rat(2, 1)) + &Cyc::one(n);
            let inv_sqrt5 = sqrt5.scale(&rat(1, 5));
            let p = &z(n, 1) - &z(n, 4);
            let q = &z(n, 2) - &z(n, 3);
            let t = GroupElement::new([
                [-(&inv_sqrt5 * &p), &inv_sqrt5 * &q],
                [&inv_sqrt5 * &q, &inv_sqrt5 * &p],
            ]);
            (n, vec![s, t])
        }
    }
}

/// Builds the binary polyhedral group attached to an ADE type by closing
/// its generators under multiplication.
///
/// Generators are checked to have determinant one and the enumerated order
/// is checked against the expected group order.
pub fn build_group(ade: AdeType) -> Result<FiniteSubgroup> {
    let (n, generators) = generators_for(ade);
    for g in &generators {
        if !g.det().is_one() {
            return Err(Error::internal(
                "build_group",
                format!("generator {g} of {ade} has determinant {}", g.det()),
            ));
        }
    }
    let identity = GroupElement::identity(n);
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::new();
    index.insert(identity, 0usize);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &generators {
            let h = elements[i].mul(g);
            if index.contains_key(&h) {
                continue;
            }
            if elements.len() >= CLOSURE_BOUND {
                return Err(Error::internal(
                    "build_group",
                    format!("closure for {ade} exceeded {CLOSURE_BOUND} elements"),
                ));
            }
            index.insert(h.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(h);
        }
    }
    if elements.len() != ade.group_order() {
        return Err(Error::internal(
            "build_group",
            format!(
                "{ade}: closure has {} elements, expected {}",
                elements.len(),
                ade.group_order()
            ),
        ));
    }
    Ok(FiniteSubgroup {
        ade,
        cyclotomic_order: n,
        generators,
        elements,
        index,
    })
}

/// A conjugacy class together with its invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: GroupElement,
    pub size: usize,
    pub element_order: usize,
    pub trace: Cyc,
    /// Indices into [`FiniteSubgroup::elements`], ascending.
    pub members: Vec<usize>,
}

/// Partitions the group into conjugacy classes.
///
/// Classes are ordered by element order, class size, trace and finally the
/// smallest member matrix, so the identity class always comes first.
pub fn conjugacy_classes(group: &FiniteSubgroup) -> Result<Vec<ConjugacyClass>> {
    let gens: Vec<(GroupElement, GroupElement)> = group
        .generators()
        .iter()
        .map(|g| (g.clone(), g.inverse()))
        .collect();
    let mut assigned = vec![false; group.order()];
    let mut classes = Vec::new();
    for start in 0..group.order() {
        if assigned[start] {
            continue;
        }
        assigned[start] = true;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for (g, ginv) in &gens {
                let c = g.mul(&group.elements[i]).mul(ginv);
                let j = group.index_of(&c).ok_or_else(|| {
                    Error::internal("conjugacy_classes", "conjugate escaped the group")
                })?;
                if !assigned[j] {
                    assigned[j] = true;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        let representative = members
            .iter()
            .map(|&i| &group.elements[i])
            .min()
            .expect("nonempty class")
            .clone();
        let element_order = group.element_order_of(&representative)?;
        let trace = representative.trace();
        classes.push(ConjugacyClass {
            size: members.len(),
            representative,
            element_order,
            trace,
            members,
        });
    }
    classes.sort_by(|a, b| {
        (a.element_order, a.size, &a.trace, &a.representative).cmp(&(
            b.element_order,
            b.size,
            &b.trace,
            &b.representative,
        ))
    });
    Ok(classes)
}

/// Maps each element index to the index of its class.
pub fn class_index_map(group: &FiniteSubgroup, classes: &[ConjugacyClass]) -> Vec<usize> {
    let mut map = vec![usize::MAX; group.order()];
    for (c, class) in classes.iter().enumerate() {
        for &m in &class.members {
            map[m] = c;
        }
    }
    map
}

/// Least common multiple of the element orders.
pub fn exponent(classes: &[ConjugacyClass]) -> u64 {
    use num_integer::Integer;
    classes
        .iter()
        .fold(1u64, |acc, c| acc.lcm(&(c.element_order as u64)))
}
