use num_traits::Num;

/// `T_k(x)` from `T_0 = 2`, `T_1 = x`, `T_{k+1} = x T_k - T_{k-1}`, so that
/// `T_k(y + 1/y) = y^k + y^{-k}`. Works for floats and exact rationals.
pub fn chebyshev<T: Num + Clone>(k: u64, x: &T) -> T {
    let two = T::one() + T::one();
    if k == 0 {
        return two;
    }
    let (mut prev, mut cur) = (two, x.clone());
    for _ in 1..k {
        let next = x.clone() * cur.clone() - prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}
