//! Closed-form face counts for the lattice-path model, computed exactly.

use crate::{CoprimePair, Error, Result};

/// `C(n, k)`, exact. Panics on `u128` overflow, which needs `n` far beyond desk scale.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for t in 0..k {
        // acc·(n-t) is divisible by t+1 because acc = C(n, t).
        acc = acc.checked_mul(n - t).expect("binomial overflow") / (t + 1);
    }
    acc
}

fn exact_div(num: u128, den: u128, what: &'static str) -> Result<u128> {
    if den == 0 || !num.is_multiple_of(den) {
        return Err(Error::NonIntegral { what });
    }
    Ok(num / den)
}

fn check_index(pair: CoprimePair, i: usize) -> Result<()> {
    if i == 0 || i > pair.a() as usize {
        return Err(Error::IndexOutOfRange { index: i, max: pair.a() as usize });
    }
    Ok(())
}

/// `C(a+b, a) / (a+b)`.
pub fn rational_catalan(pair: CoprimePair) -> Result<u128> {
    let (a, b) = (pair.a() as u64, pair.b() as u64);
    exact_div(binomial(a + b, a), (a + b) as u128, "rational Catalan number")
}

/// `C(a, i)·C(b+i-1, i-1) / a`: the number of faces with `i - 1` diagonals.
pub fn rational_kirkman(pair: CoprimePair, i: usize) -> Result<u128> {
    check_index(pair, i)?;
    let (a, b, i) = (pair.a() as u64, pair.b() as u64, i as u64);
    exact_div(binomial(a, i) * binomial(b + i - 1, i - 1), a as u128, "rational Kirkman number")
}

/// `C(a, i)·C(b-1, i-1) / a`: the h-vector entry `h_{i-1}`.
pub fn rational_narayana(pair: CoprimePair, i: usize) -> Result<u128> {
    check_index(pair, i)?;
    let (a, b, i) = (pair.a() as u64, pair.b() as u64, i as u64);
    exact_div(binomial(a, i) * binomial(b - 1, i - 1), a as u128, "rational Narayana number")
}

/// `C(b, a) / b`: the number of spheres in the wedge.
pub fn sphere_count(pair: CoprimePair) -> Result<u128> {
    let (a, b) = (pair.a() as u64, pair.b() as u64);
    exact_div(binomial(b, a), b as u128, "sphere count")
}
