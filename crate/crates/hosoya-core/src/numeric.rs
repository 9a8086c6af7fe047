//! Numeric views of polynomial triangles: entrywise evaluation at integer
//! points, OEIS b-file export, and the prime-power patterns in coefficient
//! GCDs.
//!
//! Evaluating the Fibonacci Hosoya triangle at `x = 1` recovers the classic
//! numerical Hosoya triangle (products of Fibonacci numbers); every other
//! family gives its own integer triangle. Term values beyond small
//! hand-checked cases are never hard-coded: tests compare against
//! independent integer recurrences.
//!
//! Coefficient contents of some families are pure prime powers: Fermat and
//! Fermat-Lucas polynomials have content `3^e`, even-indexed Pell
//! polynomials and second-kind Chebyshev polynomials have content `2^e`
//! (the Pell exponents follow the ruler sequence `v_2(n) + 1`).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::gfp::{Family, GfpSequence};
use crate::triangle::{HosoyaTriangle, TriangleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("no coefficient-gcd power pattern is cataloged for family {0}")]
    UnsupportedFamily(String),
    #[error("content of {family} term {n} is {content}, not a power of {base}")]
    NotAPurePower {
        family: String,
        n: usize,
        content: BigInt,
        base: u32,
    },
}

/// Entrywise evaluation of the full triangle, rows `0..=max_row`.
pub fn numeric_triangle(seq: &GfpSequence, max_row: usize, x0: &BigInt) -> Vec<Vec<BigInt>> {
    HosoyaTriangle::build(seq, max_row)
        .rows()
        .map(|row| row.iter().map(|e| e.eval(x0)).collect())
        .collect()
}

/// Entrywise evaluation of the `rows`-row initial triangle
/// (Fibonacci-type families only).
pub fn numeric_initial_triangle(
    seq: &GfpSequence,
    rows: usize,
    x0: &BigInt,
) -> Result<Vec<Vec<BigInt>>, TriangleError> {
    let triangle = HosoyaTriangle::build(seq, 0);
    Ok(triangle
        .initial_triangle(rows)?
        .iter()
        .map(|row| row.iter().map(|e| e.eval(x0)).collect())
        .collect())
}

fn pure_power_exponent(value: &BigInt, base: u32) -> Option<u32> {
    if value.is_zero() {
        return None;
    }
    let base = BigInt::from(base);
    let mut v = value.clone();
    let mut e = 0u32;
    while !v.is_one() {
        let (q, r) = num_integer::Integer::div_rem(&v, &base);
        if !r.is_zero() {
            return None;
        }
        v = q;
        e += 1;
    }
    Some(e)
}

/// For the four cataloged families, the exponents `e_n` with coefficient
/// content `p^{e_n}`, `n = 1..=n_max`:
///
/// * `fermat`, `fermat_lucas`: content of `G_n` is `3^{e_n}`;
/// * `pell`: content of `G_{2n}` is `2^{e_n}` (the ruler sequence);
/// * `chebyshev2`: content of `G_n` is `2^{e_n}`.
///
/// A content that is not a pure prime power is an error, not a report —
/// it would falsify the pattern.
pub fn coefficient_gcd_exponents(family: Family, n_max: usize) -> Result<Vec<u32>, NumericError> {
    let (base, stride) = match family {
        Family::Fermat | Family::FermatLucas => (3u32, 1usize),
        Family::Pell => (2, 2),
        Family::Chebyshev2 => (2, 1),
        other => return Err(NumericError::UnsupportedFamily(other.to_string())),
    };
    let seq = GfpSequence::builtin(family);
    (1..=n_max)
        .map(|n| {
            let content = seq.term(stride * n).content();
            pure_power_exponent(&content, base).ok_or_else(|| NumericError::NotAPurePower {
                family: family.to_string(),
                n,
                content,
                base,
            })
        })
        .collect()
}

/// OEIS b-file text: one `index value` line per term, starting at `offset`.
pub fn export_bfile<'a, I>(values: I, offset: i64) -> String
where
    I: IntoIterator<Item = &'a BigInt>,
{
    let mut out = String::new();
    for (i, v) in values.into_iter().enumerate() {
        out.push_str(&format!("{} {}\n", offset + i as i64, v));
    }
    out
}
