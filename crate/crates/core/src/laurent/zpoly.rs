//! Dense polynomials over the integers, ascending coefficient vectors.
//! Only what rational-function normalization needs: content, exact
//! division and a primitive remainder-sequence gcd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive(p: &[BigInt]) -> Vec<BigInt> {
    let g = content(p);
    if g.is_zero() || g.is_one() {
        return p.to_vec();
    }
    p.iter().map(|c| c / &g).collect()
}

/// Exact quotient `a / b` in Z[q]; `None` if `b` does not divide `a`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let db = b.len().checked_sub(1)?;
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lead = &b[db];
    let mut r = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for pos in (0..quot.len()).rev() {
        let top = &r[pos + db];
        if top.is_zero() {
            continue;
        }
        let (qc, rem) = top.div_rem(lead);
        if !rem.is_zero() {
            return None;
        }
        for (m, bc) in b.iter().enumerate() {
            r[pos + m] -= &qc * bc;
        }
        quot[pos] = qc;
    }
    if r.iter().all(|c| c.is_zero()) {
        trim(&mut quot);
        Some(quot)
    } else {
        None
    }
}

/// Pseudo-remainder of `a` by `b`, made primitive as it goes.
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    trim(&mut r);
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (m, bc) in b.iter().enumerate() {
            r[shift + m] -= &lr * bc;
        }
        trim(&mut r);
        r = primitive(&r);
    }
    r
}

/// Primitive gcd in Z[q] with positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut x = primitive(a);
    let mut y = primitive(b);
    trim(&mut x);
    trim(&mut y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = prem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    if x.last().is_some_and(|c| c.is_negative()) {
        for c in x.iter_mut() {
            *c = -&*c;
        }
    }
    x
}
