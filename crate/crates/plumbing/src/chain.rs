//! Closed-form analysis of linear chains of rational curves.
//!
//! For a chain with multiplicities `m_1..m_n` (far end first) the sequence
//! `a_1 = 1, a_2 = m_1, a_{i+1} = m_i a_i - a_{i-1}` determines the whole
//! boundary group: it is cyclic of order `a_{n+1}` (infinite cyclic when
//! that value is 0), generated by the far-end meridian, and the i-th
//! meridian is its `a_i`-th power.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChainError {
    #[error("chain is empty")]
    EmptyChain,
    #[error("index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
}

/// Order of an element of a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Order {
    Trivial,
    Finite(BigUint),
    Infinite,
}

impl Order {
    fn finite(k: BigUint) -> Order {
        if k == BigUint::from(1u8) {
            Order::Trivial
        } else {
            Order::Finite(k)
        }
    }

    /// Total order: Trivial < Finite(k) < Infinite.
    pub fn rank(&self) -> (u8, BigUint) {
        match self {
            Order::Trivial => (0, BigUint::zero()),
            Order::Finite(k) => (1, k.clone()),
            Order::Infinite => (2, BigUint::zero()),
        }
    }
}

impl PartialOrd for Order {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.rank().cmp(&other.rank()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainData {
    pub m: Vec<i64>,
    /// a_1 .. a_{n+1}.
    pub a: Vec<BigInt>,
}

impl ChainData {
    /// Group order indicator a_{n+1}; the group is infinite cyclic iff 0.
    pub fn group_order(&self) -> &BigInt {
        self.a.last().expect("nonempty by construction")
    }
}

/// Run the recurrence. Multiplicities of any sign are accepted; the
/// strict-growth conclusions hold only for all `m_i >= 2`.
pub fn chain_sequence(m: &[i64]) -> Result<ChainData, ChainError> {
    if m.is_empty() {
        return Err(ChainError::EmptyChain);
    }
    let mut a = Vec::with_capacity(m.len() + 1);
    a.push(BigInt::from(1));
    a.push(BigInt::from(m[0]));
    for i in 1..m.len() {
        let next = BigInt::from(m[i]) * &a[i] - &a[i - 1];
        a.push(next);
    }
    Ok(ChainData { m: m.to_vec(), a })
}

/// Order of the i-th meridian (1-based) in the chain group.
pub fn gamma_order_in_chain(m: &[i64], i: usize) -> Result<Order, ChainError> {
    let data = chain_sequence(m)?;
    if i < 1 || i > m.len() {
        return Err(ChainError::IndexOutOfRange(i, m.len()));
    }
    let total = data.group_order();
    let ai = &data.a[i - 1];
    if total.is_zero() {
        Ok(if ai.is_zero() {
            Order::Trivial
        } else {
            Order::Infinite
        })
    } else {
        let total = total.abs().to_biguint().expect("abs");
        let ai = ai.abs().to_biguint().expect("abs");
        Ok(Order::finite(&total / total.gcd(&ai)))
    }
}

/// True iff raising `m_j` by `boost` does not decrease any meridian order.
pub fn order_growth_check(m: &[i64], j: usize, boost: i64) -> Result<bool, ChainError> {
    if j < 1 || j > m.len() {
        return Err(ChainError::IndexOutOfRange(j, m.len()));
    }
    let mut boosted = m.to_vec();
    boosted[j - 1] += boost;
    for i in 1..=m.len() {
        let before = gamma_order_in_chain(m, i)?;
        let after = gamma_order_in_chain(&boosted, i)?;
        if after < before {
            return Ok(false);
        }
    }
    Ok(true)
}
