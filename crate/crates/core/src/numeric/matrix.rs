use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Shared tally of matrix-matrix products.
///
/// Clones share the same underlying count, so a counter attached to an input
/// matrix observes every product derived from it.
#[derive(Clone, Debug, Default)]
pub struct MulCounter(Arc<AtomicU64>);

impl MulCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self) -> u64 {
        self.0.load(Ordering::Relaxed)
    }

    fn bump(&self) {
        self.0.fetch_add(1, Ordering::Relaxed);
    }
}

/// Dense square matrix over arbitrary-precision integers, row-major.
#[derive(Clone)]
pub struct BigMatrix {
    order: usize,
    entries: Vec<BigInt>,
    counter: MulCounter,
}

impl BigMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![BigInt::zero(); order * order],
            counter: MulCounter::new(),
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::scalar(order, BigInt::one())
    }

    /// `c * I`.
    pub fn scalar(order: usize, c: BigInt) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.entries[i * order + i] = c.clone();
        }
        m
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        Self {
            order,
            entries,
            counter: MulCounter::new(),
        }
    }

    /// Builds a matrix from rows, rejecting ragged input.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != order {
                return Err(Error::NotSquare {
                    row,
                    len: r.len(),
                    expected: order,
                });
            }
            entries.extend(r.iter().cloned().map(Into::into));
        }
        Ok(Self {
            order,
            entries,
            counter: MulCounter::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.order + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn counter(&self) -> &MulCounter {
        &self.counter
    }

    /// Replaces the attached counter; products of the result report to `counter`.
    pub fn with_counter(mut self, counter: MulCounter) -> Self {
        self.counter = counter;
        self
    }

    /// Exact product. The result inherits `self`'s counter, which is bumped once.
    pub fn mul(&self, other: &BigMatrix) -> Result<BigMatrix> {
        self.check_order(other)?;
        let n = self.order;
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            let acc = &mut out[i * n..(i + 1) * n];
            for l in 0..n {
                let a = &self.entries[i * n + l];
                if a.is_zero() {
                    continue;
                }
                let b_row = &other.entries[l * n..(l + 1) * n];
                if a.is_one() {
                    for (c, b) in acc.iter_mut().zip(b_row) {
                        *c += b;
                    }
                } else {
                    for (c, b) in acc.iter_mut().zip(b_row) {
                        if !b.is_zero() {
                            *c += a * b;
                        }
                    }
                }
            }
        }
        self.counter.bump();
        Ok(BigMatrix {
            order: n,
            entries: out,
            counter: self.counter.clone(),
        })
    }

    pub fn square(&self) -> BigMatrix {
        self.mul(self).expect("square matrix times itself")
    }

    pub fn add(&self, other: &BigMatrix) -> Result<BigMatrix> {
        self.check_order(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(BigMatrix {
            order: self.order,
            entries,
            counter: self.counter.clone(),
        })
    }

    /// `self - c * other`, in place.
    pub fn sub_scaled_assign(&mut self, other: &BigMatrix, c: &BigInt) -> Result<()> {
        self.check_order(other)?;
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a -= c * b;
            }
        }
        Ok(())
    }

    /// `self - c * I`, in place.
    pub fn sub_identity_assign(&mut self, c: &BigInt) {
        let n = self.order;
        for i in 0..n {
            self.entries[i * n + i] -= c;
        }
    }

    /// `X^k` by binary exponentiation; uses at most `2 * floor(log2 k)` products.
    pub fn pow(&self, k: u64) -> BigMatrix {
        if k == 0 {
            return BigMatrix::identity(self.order).with_counter(self.counter.clone());
        }
        let mut base = self.clone();
        let mut acc: Option<BigMatrix> = None;
        let mut e = k;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base).expect("equal orders"),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.square();
        }
        acc.expect("k > 0")
    }

    pub fn trace(&self) -> BigInt {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn transpose(&self) -> BigMatrix {
        BigMatrix::from_fn(self.order, |i, j| self.get(j, i).clone())
            .with_counter(self.counter.clone())
    }

    pub fn row_sum(&self, i: usize) -> BigInt {
        self.row(i).iter().sum()
    }

    fn check_order(&self, other: &BigMatrix) -> Result<()> {
        if self.order != other.order {
            return Err(Error::Dimension {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }
}

impl PartialEq for BigMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.entries == other.entries
    }
}

impl Eq for BigMatrix {}

impl fmt::Debug for BigMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BigMatrix({}x{})", self.order, self.order)?;
        for i in 0..self.order {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
