//! Finite abelian groups presented as products of cyclic groups.
//!
//! Elements are enumerated in lexicographic order of their residue vectors,
//! so the identity always has index 0. Letters and matrix columns refer to
//! elements by this index.

use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};

/// Largest group order accepted; element indices must fit in a `u8`.
pub const MAX_GROUP_ORDER: usize = 255;

/// Element of a finite abelian group, stored as reduced residues together
/// with the cyclic orders of its group, so elements of different groups
/// never compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    orders: Arc<[u32]>,
    residues: Vec<u32>,
}

impl GroupElement {
    pub fn residues(&self) -> &[u32] {
        &self.residues
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.residues.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug)]
struct GroupData {
    orders: Vec<u32>,
    elements: Vec<GroupElement>,
    mul: Vec<u8>,
    inv: Vec<u8>,
}

/// A finite abelian group `Z/n1 x ... x Z/nk`. Cheap to clone.
#[derive(Clone)]
pub struct GroupSpec {
    data: Arc<GroupData>,
}

impl PartialEq for GroupSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data.orders == other.data.orders
    }
}
impl Eq for GroupSpec {}

impl fmt::Debug for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupSpec({})", self)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.data.orders.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self.data.orders.iter().map(|o| o.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl GroupSpec {
    /// Builds the group from its cyclic orders. Factors of order 1 are
    /// dropped, so `[]` and `[1, 1]` give the same canonical trivial group.
    pub fn new(cyclic_orders: &[u32]) -> Result<Self> {
        if cyclic_orders.iter().any(|&o| o == 0) {
            return Err(AlgebraError::Domain("cyclic orders must be >= 1".into()));
        }
        let orders: Vec<u32> = cyclic_orders.iter().copied().filter(|&o| o > 1).collect();
        let size: usize = orders.iter().map(|&o| o as usize).product();
        if size > MAX_GROUP_ORDER {
            return Err(AlgebraError::Unsupported(format!(
                "group order {size} exceeds {MAX_GROUP_ORDER}"
            )));
        }
        let mut elements = Vec::with_capacity(size);
        let shared: Arc<[u32]> = orders.clone().into();
        let mut cur = vec![0u32; orders.len()];
        for _ in 0..size {
            elements.push(GroupElement { orders: shared.clone(), residues: cur.clone() });
            for k in (0..orders.len()).rev() {
                cur[k] += 1;
                if cur[k] < orders[k] {
                    break;
                }
                cur[k] = 0;
            }
        }
        let index_of = |res: &[u32]| -> usize {
            res.iter()
                .zip(&orders)
                .fold(0usize, |acc, (&r, &o)| acc * o as usize + r as usize)
        };
        let mut mul = vec![0u8; size * size];
        let mut inv = vec![0u8; size];
        for (i, a) in elements.iter().enumerate() {
            let neg: Vec<u32> = a
                .residues
                .iter()
                .zip(&orders)
                .map(|(&r, &o)| (o - r) % o)
                .collect();
            inv[i] = index_of(&neg) as u8;
            for (j, b) in elements.iter().enumerate() {
                let s: Vec<u32> = a
                    .residues
                    .iter()
                    .zip(&b.residues)
                    .zip(&orders)
                    .map(|((&x, &y), &o)| (x + y) % o)
                    .collect();
                mul[i * size + j] = index_of(&s) as u8;
            }
        }
        Ok(GroupSpec { data: Arc::new(GroupData { orders, elements, mul, inv }) })
    }

    pub fn trivial() -> Self {
        Self::new(&[]).expect("trivial group")
    }

    /// `Z/n`.
    pub fn cyclic(n: u32) -> Self {
        Self::new(&[n]).expect("cyclic group")
    }

    /// Parses `trivial`, `1`, `Z3`, `3`, `2x2` or `Z2xZ4`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("trivial") || t.is_empty() {
            return Self::new(&[]);
        }
        let mut orders = Vec::new();
        for part in t.split(['x', 'X', '*']) {
            let p = part.trim().trim_start_matches(['Z', 'z']).trim_start_matches('/');
            let o: u32 = p.parse().map_err(|_| AlgebraError::Parse {
                position: format!("group spec `{t}`"),
                message: format!("bad cyclic factor `{part}`"),
            })?;
            orders.push(o);
        }
        Self::new(&orders)
    }

    /// Canonical cyclic orders (no factors of order 1).
    pub fn cyclic_orders(&self) -> &[u32] {
        &self.data.orders
    }

    pub fn order(&self) -> usize {
        self.data.elements.len()
    }

    pub fn is_cyclic(&self) -> bool {
        // Z/m x Z/n is cyclic iff the orders are pairwise coprime.
        let o = &self.data.orders;
        for i in 0..o.len() {
            for j in i + 1..o.len() {
                if num_integer::gcd(o[i], o[j]) != 1 {
                    return false;
                }
            }
        }
        true
    }

    /// All elements, identity first, in lexicographic residue order.
    pub fn elements(&self) -> &[GroupElement] {
        &self.data.elements
    }

    pub fn identity(&self) -> GroupElement {
        self.data.elements[0].clone()
    }

    pub fn element(&self, index: usize) -> &GroupElement {
        &self.data.elements[index]
    }

    /// Builds an element, reducing residues into range.
    pub fn make(&self, residues: &[i64]) -> Result<GroupElement> {
        if residues.len() != self.data.orders.len() {
            return Err(AlgebraError::Structural(format!(
                "element has {} residues, group {} has {} factors",
                residues.len(),
                self,
                self.data.orders.len()
            )));
        }
        Ok(GroupElement {
            orders: self.data.orders.as_slice().into(),
            residues: residues
                .iter()
                .zip(&self.data.orders)
                .map(|(&r, &o)| r.rem_euclid(o as i64) as u32)
                .collect(),
        })
    }

    /// Index of an element in the canonical enumeration.
    pub fn index_of(&self, g: &GroupElement) -> Result<usize> {
        if *g.orders != *self.data.orders {
            return Err(AlgebraError::Structural(format!("{g} is not an element of {self}")));
        }
        Ok(g.residues
            .iter()
            .zip(&self.data.orders)
            .fold(0usize, |acc, (&r, &o)| acc * o as usize + r as usize))
    }

    pub fn group_mul(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        let (i, j) = (self.index_of(a)?, self.index_of(b)?);
        Ok(self.element(self.mul_idx(i, j)).clone())
    }

    pub fn group_inv(&self, a: &GroupElement) -> Result<GroupElement> {
        let i = self.index_of(a)?;
        Ok(self.element(self.inv_idx(i)).clone())
    }

    /// Product on indices.
    #[inline]
    pub fn mul_idx(&self, i: usize, j: usize) -> usize {
        self.data.mul[i * self.order() + j] as usize
    }

    /// Inverse on indices.
    #[inline]
    pub fn inv_idx(&self, i: usize) -> usize {
        self.data.inv[i] as usize
    }

    /// `a * b^{-1}` on indices.
    #[inline]
    pub fn div_idx(&self, a: usize, b: usize) -> usize {
        self.mul_idx(a, self.inv_idx(b))
    }
}
