//! Dense polynomials over `F_p`, little-endian coefficient vectors.
//!
//! Only what field construction needs: reduction, modular powers, gcd and
//! two independent irreducibility tests.

pub(crate) type Poly = Vec<u64>;

pub(crate) fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree of a trimmed polynomial; `None` for the zero polynomial.
pub(crate) fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_scalar(a % p, p - 2, p)
}

pub(crate) fn pow_scalar(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

/// Remainder of `a` modulo a nonzero `f`.
pub(crate) fn rem(a: &[u64], f: &[u64], p: u64) -> Poly {
    let df = degree(f).expect("division by the zero polynomial");
    let lead_inv = inv_mod(f[df], p);
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < df {
            break;
        }
        let factor = r[dr] * lead_inv % p;
        let shift = dr - df;
        for (i, &c) in f.iter().enumerate().take(df + 1) {
            r[shift + i] = (r[shift + i] + p - factor * c % p) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Poly {
    rem(&mul(a, b, p), f, p)
}

pub(crate) fn pow_mod(base: &[u64], mut exp: u64, f: &[u64], p: u64) -> Poly {
    let mut acc = rem(&[1], f, p);
    let mut b = rem(base, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(&acc, &b, f, p);
        }
        b = mul_mod(&b, &b, f, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn distinct_prime_factors(n: u64) -> Vec<u64> {
    prime_factors(n)
}

/// Rabin's test: `f` of degree `k` is irreducible iff `x^{p^k} = x mod f`
/// and `gcd(x^{p^{k/r}} - x, f) = 1` for every prime `r | k`.
pub(crate) fn is_irreducible_rabin(f: &[u64], p: u64) -> bool {
    let Some(k) = degree(f) else { return false };
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let x = vec![0, 1];
    // frob[i] = x^{p^i} mod f
    let mut frob = vec![rem(&x, f, p)];
    for i in 1..=k {
        let next = pow_mod(&frob[i - 1], p, f, p);
        frob.push(next);
    }
    if !sub(&frob[k], &x, p).is_empty() {
        return false;
    }
    prime_factors(k as u64).into_iter().all(|r| {
        let h = sub(&frob[k / r as usize], &x, p);
        degree(&gcd(&h, f, p)) == Some(0)
    })
}

/// Trial division by every monic polynomial of degree `1..=deg(f)/2`.
pub(crate) fn has_proper_factor(f: &[u64], p: u64) -> bool {
    let Some(k) = degree(f) else { return true };
    for d in 1..=k / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut g = digits(idx, p, d);
            g.push(1);
            if rem(f, &g, p).is_empty() {
                return true;
            }
        }
    }
    false
}

/// Base-`p` digits of `value`, little-endian, exactly `len` of them.
pub(crate) fn digits(mut value: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(value % p);
        value /= p;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rabin_agrees_with_trial_division() {
        for p in [2u64, 3, 5, 7] {
            for k in 1..=4usize {
                for idx in 0..p.pow(k as u32) {
                    let mut f = digits(idx, p, k);
                    f.push(1);
                    assert_eq!(
                        is_irreducible_rabin(&f, p),
                        !has_proper_factor(&f, p),
                        "p={p} f={f:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // number of monic irreducibles of degree k over F_p
        let count = |p: u64, k: usize| {
            (0..p.pow(k as u32))
                .filter(|&i| {
                    let mut f = digits(i, p, k);
                    f.push(1);
                    is_irreducible_rabin(&f, p)
                })
                .count()
        };
        assert_eq!(count(2, 2), 1);
        assert_eq!(count(2, 3), 2);
        assert_eq!(count(2, 4), 3);
        assert_eq!(count(3, 2), 3);
        assert_eq!(count(5, 2), 10);
        assert_eq!(count(2, 6), 9);
    }

    #[test]
    fn gcd_and_rem() {
        // (x+1)(x+2) over F_5 = x^2 + 3x + 2
        let f = vec![2, 3, 1];
        assert!(rem(&f, &[1, 1], 5).is_empty());
        assert_eq!(gcd(&f, &[2, 1], 5).len(), 2);
    }
}
