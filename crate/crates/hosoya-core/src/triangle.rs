//! Hosoya polynomial triangles.
//!
//! For a GFP sequence `{G_n}` the triangle entry in row `r`, position `k`
//! (0-indexed from the left) is `H(r, k) = G_k(x) G_{r-k}(x)`. The same
//! array is generated by the double recursion
//!
//! ```text
//! H(r, k) = d(x) H(r-1, k)   + g(x) H(r-2, k)
//! H(r, k) = d(x) H(r-1, k-1) + g(x) H(r-2, k-2)
//! ```
//!
//! with initial conditions `H(0,0) = p_0^2`, `H(1,0) = H(1,1) = p_0 p_1`,
//! `H(2,1) = p_1^2`. The product formula is the domain-complete definition
//! used to build triangles; the recursion is verified against it.
//!
//! Points carry two coordinate systems: rectangular `(r, k)` and diagonal
//! `(m, n) = (k, r - k)`, under which the entry is simply `G_m G_n`. The
//! slash diagonal `SD(G_n)` collects `G_n G_i` and the backslash diagonal
//! `BD(G_m)` collects `G_i G_m`.

use thiserror::Error;

use crate::gfp::{GfpKind, GfpSequence};
use crate::poly::IntPolynomial;
use crate::report::VerificationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("coordinates ({r}, {k}) outside the triangle with {rows} rows")]
    OutOfRange { r: usize, k: usize, rows: usize },
    #[error("initial triangles exist only for Fibonacci-type sequences")]
    NotFibonacciType,
}

/// A triangle position with both coordinate systems and its value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrianglePoint {
    /// `(r, k)`: row and offset from the left.
    pub rect: (usize, usize),
    /// `(m, n) = (k, r-k)`: backslash/slash diagonal indices.
    pub diag: (usize, usize),
    pub value: IntPolynomial,
}

/// Rectangular to diagonal coordinates; requires `k <= r`.
pub fn to_diag(r: usize, k: usize) -> Result<(usize, usize), TriangleError> {
    if k > r {
        return Err(TriangleError::OutOfRange { r, k, rows: r + 1 });
    }
    Ok((k, r - k))
}

/// Diagonal to rectangular coordinates; total on nonnegative pairs.
pub fn to_rect(m: usize, n: usize) -> (usize, usize) {
    (m + n, m)
}

/// A fully materialized triangle for rows `0..=max_row`.
///
/// Entries live in a flat vector indexed by `r(r+1)/2 + k` and share the
/// sequence's memoized terms, so building costs `O(R)` sequence terms plus
/// `O(R^2)` multiplications. Immutable after build.
#[derive(Debug, Clone)]
pub struct HosoyaTriangle {
    seq: GfpSequence,
    max_row: usize,
    entries: Vec<IntPolynomial>,
}

impl HosoyaTriangle {
    /// Builds rows `0..=max_row` via the product formula.
    pub fn build(seq: &GfpSequence, max_row: usize) -> Self {
        let mut entries = Vec::with_capacity((max_row + 1) * (max_row + 2) / 2);
        for r in 0..=max_row {
            for k in 0..=r {
                entries.push(&seq.term(k) * &seq.term(r - k));
            }
        }
        HosoyaTriangle {
            seq: seq.clone(),
            max_row,
            entries,
        }
    }

    pub fn sequence(&self) -> &GfpSequence {
        &self.seq
    }

    /// Largest row index stored.
    pub fn max_row(&self) -> usize {
        self.max_row
    }

    pub fn entry(&self, r: usize, k: usize) -> Result<&IntPolynomial, TriangleError> {
        if r > self.max_row || k > r {
            return Err(TriangleError::OutOfRange {
                r,
                k,
                rows: self.max_row + 1,
            });
        }
        Ok(&self.entries[r * (r + 1) / 2 + k])
    }

    pub fn row(&self, r: usize) -> &[IntPolynomial] {
        let start = r * (r + 1) / 2;
        &self.entries[start..start + r + 1]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[IntPolynomial]> {
        (0..=self.max_row).map(|r| self.row(r))
    }

    /// Checks both recursions against the stored entries, with the spec's
    /// own `d` and `g`.
    pub fn verify_double_recursion(&self) -> VerificationReport {
        let spec = self.seq.spec();
        self.verify_double_recursion_with(spec.d(), spec.g())
    }

    /// Same check with explicit `delta`/`gamma`, so broken weights can be
    /// demonstrated to fail.
    ///
    /// The two recursions are reported separately: `vertical` is
    /// `H(r,k) = delta H(r-1,k) + gamma H(r-2,k)` (needs `k <= r-2` to stay
    /// in the triangle) and `diagonal` is the index-shifted form (needs
    /// `k >= 2`; positions with `k-1` or `k-2` negative are undefined and
    /// skipped).
    pub fn verify_double_recursion_with(
        &self,
        delta: &IntPolynomial,
        gamma: &IntPolynomial,
    ) -> VerificationReport {
        let mut report = VerificationReport::new("double-recursion")
            .with_param("family", self.seq.spec().label())
            .with_param("rows", self.max_row + 1);
        for r in 2..=self.max_row {
            for k in 0..=r - 1 {
                if k <= r - 2 {
                    let expect = &(delta * self.entry(r - 1, k).unwrap())
                        + &(gamma * self.entry(r - 2, k).unwrap());
                    report.check(self.entry(r, k).unwrap() == &expect, || {
                        (
                            format!("vertical (r,k)=({r},{k})"),
                            format!("H({r},{k}) = {} but recursion gives {expect}",
                                self.entry(r, k).unwrap()),
                        )
                    });
                }
                if k >= 2 {
                    let expect = &(delta * self.entry(r - 1, k - 1).unwrap())
                        + &(gamma * self.entry(r - 2, k - 2).unwrap());
                    report.check(self.entry(r, k).unwrap() == &expect, || {
                        (
                            format!("diagonal (r,k)=({r},{k})"),
                            format!("H({r},{k}) = {} but recursion gives {expect}",
                                self.entry(r, k).unwrap()),
                        )
                    });
                }
            }
        }
        report
    }

    /// `SD(G_n)`: the points `G_n G_i` for `i = 0..len`, rectangular
    /// coordinates `(n+i, n)`.
    pub fn slash_diagonal(&self, n: usize, len: usize) -> Vec<TrianglePoint> {
        (0..len)
            .map(|i| TrianglePoint {
                rect: (n + i, n),
                diag: (n, i),
                value: &self.seq.term(n) * &self.seq.term(i),
            })
            .collect()
    }

    /// `BD(G_m)`: the points `G_i G_m` for `i = 0..len`, rectangular
    /// coordinates `(m+i, i)`.
    pub fn backslash_diagonal(&self, m: usize, len: usize) -> Vec<TrianglePoint> {
        (0..len)
            .map(|i| TrianglePoint {
                rect: (m + i, i),
                diag: (i, m),
                value: &self.seq.term(i) * &self.seq.term(m),
            })
            .collect()
    }

    /// The `n`-initial triangle: the first `n` rows with nonzero entries.
    ///
    /// Fibonacci-type triangles have zero edges (`G_0 = 0`), so row `j`
    /// (1-indexed) collects positions `(r, k) = (j+1, 1..=j)` of the full
    /// triangle.
    pub fn initial_triangle(&self, n: usize) -> Result<Vec<Vec<IntPolynomial>>, TriangleError> {
        if self.seq.spec().kind() != GfpKind::FibonacciType {
            return Err(TriangleError::NotFibonacciType);
        }
        let mut rows = Vec::with_capacity(n);
        for j in 1..=n {
            rows.push(
                (1..=j)
                    .map(|k| &self.seq.term(k) * &self.seq.term(j + 1 - k))
                    .collect(),
            );
        }
        Ok(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfp::{Family, GfpSpec};
    use crate::report::Outcome;
    use proptest::prelude::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    fn fib_triangle(rows: usize) -> HosoyaTriangle {
        HosoyaTriangle::build(&GfpSequence::builtin(Family::Fibonacci), rows)
    }

    #[test]
    fn product_formula_rows() {
        let t = fib_triangle(6);
        let nonzero: Vec<_> = t.row(4).iter().filter(|e| !e.is_zero()).cloned().collect();
        assert_eq!(nonzero, vec![p("x^2+1"), p("x^2"), p("x^2+1")]);
        assert_eq!(t.entry(6, 2).unwrap(), &p("x^4+2*x^2"));
        let lucas = HosoyaTriangle::build(&GfpSequence::builtin(Family::Lucas), 3);
        assert_eq!(lucas.entry(2, 1).unwrap(), &p("x^2"));
        assert!(t.entry(7, 0).is_err());
        assert!(t.entry(3, 4).is_err());
    }

    #[test]
    fn initial_conditions() {
        for fam in [Family::Fibonacci, Family::Lucas, Family::Fermat] {
            let spec = GfpSpec::builtin(fam);
            let t = HosoyaTriangle::build(&GfpSequence::new(spec.clone()), 2);
            assert_eq!(t.entry(0, 0).unwrap(), &(spec.p0() * spec.p0()));
            assert_eq!(t.entry(1, 0).unwrap(), &(spec.p0() * spec.p1()));
            assert_eq!(t.entry(1, 1).unwrap(), &(spec.p0() * spec.p1()));
            assert_eq!(t.entry(2, 1).unwrap(), &(spec.p1() * spec.p1()));
        }
    }

    #[test]
    fn double_recursion_passes_and_mutant_fails() {
        for fam in [Family::Fibonacci, Family::Vieta] {
            let t = HosoyaTriangle::build(&GfpSequence::builtin(fam), 10);
            assert_eq!(t.verify_double_recursion().outcome, Outcome::Pass, "{fam}");
        }
        let t = fib_triangle(6);
        let broken = &p("x") + &p("1");
        let report = t.verify_double_recursion_with(&broken, &p("1"));
        assert_eq!(report.outcome, Outcome::Fail);
        assert!(!report.failures.is_empty());
        assert!(report.failures[0].location.contains("(r,k)="));
    }

    #[test]
    fn coordinate_conversions() {
        assert_eq!(to_diag(6, 3).unwrap(), (3, 3));
        assert_eq!(to_diag(4, 1).unwrap(), (1, 3));
        assert_eq!(to_rect(2, 5), (7, 2));
        assert!(to_diag(3, 4).is_err());
    }

    #[test]
    fn diagonals() {
        let t = fib_triangle(4);
        let sd: Vec<_> = t.slash_diagonal(2, 3).into_iter().map(|pt| pt.value).collect();
        assert_eq!(sd, vec![p("0"), p("x"), p("x^2")]);
        let all_zero = t.slash_diagonal(0, 5);
        assert!(all_zero.iter().all(|pt| pt.value.is_zero()));
        let lucas = HosoyaTriangle::build(&GfpSequence::builtin(Family::Lucas), 2);
        let bd: Vec<_> = lucas.backslash_diagonal(0, 2).into_iter().map(|pt| pt.value).collect();
        assert_eq!(bd, vec![p("4"), p("2*x")]);
        // Coordinates agree with the conversion maps.
        for pt in t.slash_diagonal(3, 4).iter().chain(t.backslash_diagonal(2, 4).iter()) {
            assert_eq!(to_diag(pt.rect.0, pt.rect.1).unwrap(), pt.diag);
            assert_eq!(to_rect(pt.diag.0, pt.diag.1), pt.rect);
        }
    }

    #[test]
    fn initial_triangle_rows() {
        let t = fib_triangle(3);
        assert_eq!(
            t.initial_triangle(2).unwrap(),
            vec![vec![p("1")], vec![p("x"), p("x")]]
        );
        let five = t.initial_triangle(5).unwrap();
        assert_eq!(
            five[4],
            vec![
                p("x^4+3*x^2+1"),
                p("x^4+2*x^2"),
                p("x^4+2*x^2+1"),
                p("x^4+2*x^2"),
                p("x^4+3*x^2+1"),
            ]
        );
        let lucas = HosoyaTriangle::build(&GfpSequence::builtin(Family::Lucas), 3);
        assert!(matches!(
            lucas.initial_triangle(2),
            Err(TriangleError::NotFibonacciType)
        ));
    }

    #[test]
    fn symmetry_and_point_values() {
        for fam in [Family::Fibonacci, Family::FermatLucas, Family::Jacobsthal] {
            let seq = GfpSequence::builtin(fam);
            let t = HosoyaTriangle::build(&seq, 9);
            for r in 0..=9 {
                for k in 0..=r {
                    assert_eq!(t.entry(r, k).unwrap(), t.entry(r, r - k).unwrap());
                    let (m, n) = to_diag(r, k).unwrap();
                    assert_eq!(t.entry(r, k).unwrap(), &(&seq.term(m) * &seq.term(n)));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn coordinate_bijection(m in 0usize..200, n in 0usize..200) {
            let (r, k) = to_rect(m, n);
            prop_assert_eq!(to_diag(r, k).unwrap(), (m, n));
        }
    }
}
