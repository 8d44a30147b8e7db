//! Chebyshev matrix ladder: geodesic-cycle counts `N_k` and the `H_k`
//! sequence in `O(log k)` exact matrix products.
//!
//! With `T_k` the Chebyshev-type polynomials `T_0 = 2`, `T_1 = x`,
//! `T_{k+1} = x T_k - T_{k-1}`, the ladder keeps the integer matrices
//! `S_j = q^{j/2} T_j(q^{-1/2} A)` for the indices listed by [`indices`] and
//! combines them with
//!
//! ```text
//! S_{2j}     = S_j^2 - 2 q^j I
//! S_{2j+1}   = S_{j+1} S_j - q^j A
//! ```
//!
//! Then `N_k = trace(S_k)` for odd `k` and `N_k = n(q-1) + trace(S_k)` for
//! even `k`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::error::{Error, Result};
use crate::graph::RegularGraph;
use crate::numeric::{BigMatrix, MulCounter, QuadExt};

/// The index schedule `L` driving the ladder: `L[0] = k`, last entry `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexLadder(Vec<u64>);

impl IndexLadder {
    pub fn new(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroIndex);
        }
        let mut k = k;
        let mut l = vec![k];
        while k.is_multiple_of(2) {
            k /= 2;
            l.push(k);
        }
        while k != 1 {
            k = k.div_ceil(2);
            l.push(k);
            l.push(k - 1);
            if k.is_multiple_of(2) {
                k -= 1;
            }
        }
        Ok(Self(l))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn k(&self) -> u64 {
        self.0[0]
    }
}

/// Shorthand for [`IndexLadder::new`].
pub fn indices(k: u64) -> Result<IndexLadder> {
    IndexLadder::new(k)
}

/// Exact `H_k`. Even `k` gives a rational; odd `k` an element of ℚ[√q].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HValue {
    pub k: u64,
    pub value: QuadExt,
}

impl HValue {
    pub fn sign(&self) -> Sign {
        self.value.sign()
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Minus
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    /// The rational value; `Some` for every even `k`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.value.as_rational()
    }
}

impl fmt::Display for HValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_{} = {}", self.k, self.value)
    }
}

/// Final register contents of one ladder run.
#[derive(Clone, Debug)]
pub struct LadderOutcome {
    pub k: u64,
    /// `trace(q^{k/2} T_k(q^{-1/2} A))`.
    pub trace: BigInt,
    /// Exponent `e` with `Q[0] = q^e`, i.e. `floor(k/2)`.
    pub q_exponent: u64,
    pub multiplications: u64,
}

struct Register {
    t: BigMatrix,
    /// `Q = q^exp`
    exp: u64,
}

fn reg(regs: &[Option<Register>; 4], j: usize) -> &Register {
    regs[j].as_ref().expect("register populated by schedule")
}

/// Ladder runner over one graph. Checked mode re-derives every register from
/// the three-term recurrence and compares at each step.
#[derive(Clone, Copy, Debug)]
pub struct Ladder<'g> {
    graph: &'g RegularGraph,
    checked: bool,
}

impl<'g> Ladder<'g> {
    pub fn new(graph: &'g RegularGraph) -> Self {
        Self {
            graph,
            checked: false,
        }
    }

    pub fn checked(mut self, on: bool) -> Self {
        self.checked = on;
        self
    }

    pub fn run(&self, k: u64) -> Result<LadderOutcome> {
        let schedule = IndexLadder::new(k)?;
        let l = schedule.entries();
        let q = BigInt::from(self.graph.q());
        let counter = MulCounter::new();
        let a = self.graph.adjacency().clone().with_counter(counter.clone());
        let mut reference = self.checked.then(|| ScaledChebyshev::new(self.graph));

        let mut regs: [Option<Register>; 4] = [
            Some(Register {
                t: a.clone(),
                exp: 0,
            }),
            None,
            None,
            None,
        ];

        for i in (1..l.len()).rev() {
            if let Some(r) = reference.as_mut() {
                r.check(i, l[i], reg(&regs, 0))?;
            }
            regs.rotate_right(1);
            let target = l[i - 1];
            let next = if target % 2 == 0 {
                let j = if target == 2 * l[i] { 1 } else { 2 };
                let src = reg(&regs, j);
                let exp = 2 * src.exp + (l[i + j - 1] % 2);
                let mut t = src.t.square();
                t.sub_identity_assign(&(BigInt::from(2) * Pow::pow(&q, exp)));
                Register { t, exp }
            } else {
                let j = if target + 1 == 2 * l[i + 1] { 2 } else { 1 };
                let (hi, lo) = (reg(&regs, j), reg(&regs, j + 1));
                let exp = hi.exp + lo.exp;
                let mut t = hi.t.mul(&lo.t)?;
                t.sub_scaled_assign(&a, &Pow::pow(&q, exp))?;
                Register { t, exp }
            };
            regs[0] = Some(next);
        }
        let top = reg(&regs, 0);
        if let Some(r) = reference.as_mut() {
            r.check(0, k, top)?;
        }
        Ok(LadderOutcome {
            k,
            trace: top.t.trace(),
            q_exponent: top.exp,
            multiplications: counter.get(),
        })
    }

    /// Number of geodesic cycles of length `k`.
    pub fn ngc(&self, k: u64) -> Result<BigInt> {
        let out = self.run(k)?;
        Ok(if k % 2 == 1 {
            out.trace
        } else {
            out.trace + self.trivial_even_term()
        })
    }

    /// Exact `H_k`, from the final ladder registers.
    pub fn h_value(&self, k: u64) -> Result<HValue> {
        let out = self.run(k)?;
        let q = self.graph.q();
        let qb = BigInt::from(q);
        let base = BigRational::from_integer(BigInt::from(2 * (self.graph.n() as u64 - 1)));
        // Q[0] = q^e, rescaled by sqrt(q) for odd k
        let qe = Pow::pow(&qb, out.q_exponent);
        let one_minus_trace = BigInt::one() - out.trace;
        let value = if k.is_multiple_of(2) {
            let a = base
                + BigRational::from_integer(qe.clone())
                + BigRational::new(one_minus_trace, qe);
            QuadExt::rational(a, q)
        } else {
            // q^e sqrt(q) + (1 - tr) / (q^e sqrt(q)) = sqrt(q) (q^e + (1 - tr) / q^{e+1})
            let b =
                BigRational::from_integer(qe.clone()) + BigRational::new(one_minus_trace, qe * &qb);
            QuadExt::new(base, b, q)
        };
        Ok(HValue { k, value })
    }

    fn trivial_even_term(&self) -> BigInt {
        BigInt::from(self.graph.n() as u64) * (BigInt::from(self.graph.q()) - 1)
    }
}

/// `N_k` via the ladder.
pub fn ngc(g: &RegularGraph, k: u64) -> Result<BigInt> {
    Ladder::new(g).ngc(k)
}

/// `H_k` via the ladder.
pub fn h_value(g: &RegularGraph, k: u64) -> Result<HValue> {
    Ladder::new(g).h_value(k)
}

/// Matrix products used by one ladder run; equals `indices(k).len() - 1`.
pub fn ladder_mult_count(g: &RegularGraph, k: u64) -> Result<u64> {
    Ok(Ladder::new(g).run(k)?.multiplications)
}

/// Scaled Chebyshev matrices `S_j` from `S_{j+1} = A S_j - q S_{j-1}`, for
/// checked-mode comparison.
struct ScaledChebyshev {
    a: BigMatrix,
    q: BigInt,
    computed: HashMap<u64, BigMatrix>,
    prev: BigMatrix,
    cur: BigMatrix,
    cur_index: u64,
}

impl ScaledChebyshev {
    fn new(g: &RegularGraph) -> Self {
        let a = g.adjacency().clone().with_counter(MulCounter::new());
        let s0 = BigMatrix::scalar(a.order(), BigInt::from(2));
        let mut computed = HashMap::new();
        computed.insert(0, s0.clone());
        computed.insert(1, a.clone());
        Self {
            q: BigInt::from(g.q()),
            prev: s0,
            cur: a.clone(),
            cur_index: 1,
            a,
            computed,
        }
    }

    fn get(&mut self, j: u64) -> &BigMatrix {
        while self.cur_index < j {
            let mut next = self.a.mul(&self.cur).expect("equal orders");
            next.sub_scaled_assign(&self.prev, &self.q)
                .expect("equal orders");
            self.prev = std::mem::replace(&mut self.cur, next);
            self.cur_index += 1;
            self.computed.insert(self.cur_index, self.cur.clone());
        }
        &self.computed[&j]
    }

    fn check(&mut self, index: usize, value: u64, reg: &Register) -> Result<()> {
        if reg.exp != value / 2 {
            return Err(Error::LadderInvariant {
                index,
                value,
                what: "Q[0] != q^floor(L[i]/2)",
            });
        }
        if &reg.t != self.get(value) {
            return Err(Error::LadderInvariant {
                index,
                value,
                what: "T[0] != q^(L[i]/2) T_L[i](q^(-1/2) A)",
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;
    use crate::numeric::ratio;
    use proptest::prelude::*;

    fn floor_log2(k: u64) -> u64 {
        63 - k.leading_zeros() as u64
    }

    #[test]
    fn index_schedules() {
        assert_eq!(indices(1).unwrap().entries(), &[1]);
        assert_eq!(indices(6).unwrap().entries(), &[6, 3, 2, 1]);
        assert_eq!(indices(8).unwrap().entries(), &[8, 4, 2, 1]);
        assert_eq!(indices(5).unwrap().entries(), &[5, 3, 2, 2, 1]);
        assert_eq!(indices(0).unwrap_err(), Error::ZeroIndex);
    }

    /// Structural properties of the schedule, scanned exhaustively.
    fn check_schedule(k: u64) {
        let l = indices(k).unwrap();
        let e = l.entries();
        assert_eq!(e[0], k);
        assert_eq!(*e.last().unwrap(), 1);
        assert!(e[..e.len() - 1].iter().all(|&x| x > 1));
        let h = k.trailing_zeros() as u64;
        assert_eq!(l.len() as u64, 2 * floor_log2(k) - h + 1, "k={k}");
        for (i, &x) in e.iter().enumerate() {
            if x <= 1 {
                continue;
            }
            if x % 2 == 0 {
                assert!(
                    e.get(i + 1) == Some(&(x / 2)) || e.get(i + 2) == Some(&(x / 2)),
                    "k={k} i={i}"
                );
            } else {
                let pair = (x.div_ceil(2), (x - 1) / 2);
                let at = |j: usize| e.get(j).copied().zip(e.get(j + 1).copied());
                assert!(
                    at(i + 1) == Some(pair) || at(i + 2) == Some(pair),
                    "k={k} i={i}"
                );
            }
        }
    }

    #[test]
    fn schedule_structure_up_to_a_million() {
        for k in 1..=1_000_000 {
            check_schedule(k);
        }
    }

    #[test]
    fn utility_counts() {
        let g = named_graph("utility").unwrap();
        assert_eq!(ngc(&g, 1).unwrap(), BigInt::from(0));
        assert_eq!(ngc(&g, 2).unwrap(), BigInt::from(0));
        assert_eq!(ngc(&g, 3).unwrap(), BigInt::from(0));
        assert_eq!(ngc(&g, 4).unwrap(), BigInt::from(72));
    }

    #[test]
    fn utility_and_cube_h_values() {
        let g = named_graph("utility").unwrap();
        assert_eq!(h_value(&g, 2).unwrap().as_rational(), Some(&ratio(31, 2)));
        let h4 = h_value(&g, 4).unwrap();
        assert_eq!(h4.as_rational(), Some(&ratio(-9, 4)));
        assert!(h4.is_negative());
        // odd k on a bipartite graph: N_3 = 0, H_3 = 10 + 2^{3/2} + 2^{-3/2}
        let h3 = h_value(&g, 3).unwrap();
        assert_eq!(
            h3.value,
            QuadExt::new(ratio(10, 1), ratio(2, 1) + ratio(1, 4), 2)
        );

        let cube = named_graph("cube").unwrap();
        let h8 = h_value(&cube, 8).unwrap();
        assert_eq!(h8.as_rational(), Some(&ratio(153, 16)));
        assert_eq!(h8.value.to_decimal(4), "9.5625");
    }

    #[test]
    fn even_h_times_power_is_integer() {
        for name in ["utility", "cube", "chvatal", "petersen", "cycle(5)"] {
            let g = named_graph(name).unwrap();
            for k in (2..=30).step_by(2) {
                let h = h_value(&g, k).unwrap();
                let r = h.as_rational().expect("even k is rational");
                let scaled = r * BigRational::from_integer(Pow::pow(&BigInt::from(g.q()), k / 2));
                assert!(scaled.is_integer(), "{name} k={k}");
            }
        }
    }

    #[test]
    fn multiplication_counts() {
        let g = named_graph("utility").unwrap();
        assert_eq!(ladder_mult_count(&g, 1).unwrap(), 0);
        assert_eq!(ladder_mult_count(&g, 8).unwrap(), 3);
        assert_eq!(ladder_mult_count(&g, 6).unwrap(), 3);
        for k in 1..=64 {
            let used = ladder_mult_count(&g, k).unwrap();
            assert_eq!(used, indices(k).unwrap().len() as u64 - 1);
            assert!(used <= 2 * floor_log2(k));
        }
    }

    #[test]
    fn checked_mode_agrees() {
        for name in [
            "utility",
            "cube",
            "chvatal",
            "petersen",
            "complete(4)",
            "cycle(5)",
        ] {
            let g = named_graph(name).unwrap();
            for k in 1..=40 {
                let plain = Ladder::new(&g).ngc(k).unwrap();
                let checked = Ladder::new(&g).checked(true).ngc(k).unwrap();
                assert_eq!(plain, checked, "{name} k={k}");
            }
        }
    }

    #[test]
    fn odd_counts_vanish_on_bipartite_graphs() {
        for name in ["utility", "cube", "cycle(6)"] {
            let g = named_graph(name).unwrap();
            for k in (1..40).step_by(2) {
                assert_eq!(ngc(&g, k).unwrap(), BigInt::from(0), "{name} k={k}");
            }
        }
    }

    proptest! {
        #[test]
        fn checked_mode_random_graphs(n in 4usize..12, q in 1u64..4, seed in 0u64..500, k in 1u64..48) {
            prop_assume!((n * (q as usize + 1)).is_multiple_of(2) && n >= q as usize + 2);
            let g = crate::graph::random_regular(n, q, seed).unwrap();
            prop_assert!(Ladder::new(&g).checked(true).run(k).is_ok());
        }
    }
}
