//! Determinant, derivative, integral, and sum identities for GFP sequences,
//! all checked as exact polynomial equalities (no tolerances anywhere).
//!
//! The geometric backbone is the parallels identity
//!
//! ```text
//! H(r+2i, k+j+i) - H(r+2i, k+i) = (-1)^i g^i(x) (H(r, k+j) - H(r, k)),
//! ```
//!
//! which specializes to the Johnson identity
//! `G_a G_b - G_c G_d = (-1)^t g^t (G_{a-t} G_{b-t} - G_{c-t} G_{d-t})`
//! for `a + b = c + d`, and further to the Catalan and Cassini identities.
//! Some published statements of the parallels identity show a single factor
//! `γ(x)` for every `i`; the verifier determines the exponent empirically
//! and records the finding.
//!
//! Division never happens inside a check: identities stated with a quotient
//! (for example closed sums with denominator `d(x)`) are asserted
//! cross-multiplied.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::gfp::{Family, GfpKind, GfpSequence};
use crate::poly::IntPolynomial;
use crate::report::VerificationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("identity requires a Fibonacci-type sequence")]
    NotFibonacciType,
    #[error("identity requires g(x) = 1")]
    RequiresUnitG,
    #[error("invalid identity instance: {0}")]
    ConstraintViolation(String),
}

/// The parity weight `I(n)`: `g(x)` for even `n`, `1` for odd `n`.
pub fn parity_weight(g: &IntPolynomial, n: usize) -> IntPolynomial {
    if n % 2 == 0 {
        g.clone()
    } else {
        IntPolynomial::one()
    }
}

fn sign_pow(g: &IntPolynomial, t: usize) -> IntPolynomial {
    let p = g.pow(t);
    if t % 2 == 1 {
        -&p
    } else {
        p
    }
}

/// Sum of the `(n-1)`-th initial-triangle row for the Fibonacci triangle:
/// `Σ_{k=1}^{n-1} F_k F_{n-k}`.
fn fibonacci_row_sum(fib: &GfpSequence, n: usize) -> IntPolynomial {
    let mut acc = IntPolynomial::zero();
    for k in 1..n {
        acc = &acc + &(&fib.term(k) * &fib.term(n - k));
    }
    acc
}

/// `F'_n = Σ_{k=1}^{n-1} F_k F_{n-k}` for `2 <= n <= n_max`: the derivative
/// of the first entry of a row equals the previous row's sum.
pub fn verify_derivative_identity(n_max: usize) -> VerificationReport {
    let fib = GfpSequence::builtin(Family::Fibonacci);
    let mut report = VerificationReport::new("derivative")
        .with_param("family", "fibonacci")
        .with_param("n_max", n_max);
    for n in 2..=n_max {
        let lhs = fib.term(n).derivative();
        let rhs = fibonacci_row_sum(&fib, n);
        report.check(lhs == rhs, || {
            (
                format!("n={n}"),
                format!("F'_n = {lhs} but the row sum is {rhs}"),
            )
        });
    }
    report
}

/// Antiderivative identities for Fibonacci polynomials.
///
/// Part 1: `F_n = Σ_{k=1}^{n-1} ∫ F_k F_{n-k}` with total integration
/// constant 1 for odd `n` and 0 for even `n`.
///
/// Part 2: `F_{n+1} + F_n - 1 = x Σ_{r=1}^{n} Σ_{k=1}^{r-1} ∫ F_k F_{r-k}`
/// with total constant `⌈n/2⌉`. The constant belongs *inside* the factor
/// `x(...)` (it is the accumulated constant of the inner integrals); the
/// verifier also evaluates the constant-outside reading and the `r <= n-1`
/// upper bound and records where each first fails.
pub fn verify_integral_identities(n_max: usize) -> VerificationReport {
    let fib = GfpSequence::builtin(Family::Fibonacci);
    let mut report = VerificationReport::new("integral")
        .with_param("family", "fibonacci")
        .with_param("n_max", n_max);

    for n in 2..=n_max {
        let row_sum = fibonacci_row_sum(&fib, n);
        match row_sum.integrate(0) {
            Ok(anti) => {
                let constant = IntPolynomial::constant(if n % 2 == 1 { 1 } else { 0 });
                let lhs = &anti + &constant;
                let rhs = fib.term(n);
                report.check(lhs == rhs, || {
                    (
                        format!("part 1, n={n}"),
                        format!("Σ∫ + C = {lhs} but F_n = {rhs}"),
                    )
                });
            }
            Err(e) => report.fail_case(
                format!("part 1, n={n}"),
                format!("row sum {row_sum} has no integer antiderivative: {e}"),
            ),
        }
    }

    let x = IntPolynomial::x();
    let mut outside_first_fail = None;
    let mut short_bound_first_fail = None;
    let mut inner_sum = IntPolynomial::zero();
    for n in 1..=n_max {
        let constant = IntPolynomial::constant(BigInt::from(n.div_ceil(2)));
        let rhs = &(&fib.term(n + 1) + &fib.term(n)) - &IntPolynomial::one();
        // inner_sum still holds Σ_{r=1}^{n-1} here: the truncated reading.
        let short = &x * &(&inner_sum + &constant);
        if short != rhs && short_bound_first_fail.is_none() {
            short_bound_first_fail = Some(n);
        }
        match fibonacci_row_sum(&fib, n).integrate(0) {
            Ok(anti) => inner_sum = &inner_sum + &anti,
            Err(e) => {
                report.fail_case(
                    format!("part 2, n={n}"),
                    format!("inner integral not exact: {e}"),
                );
                continue;
            }
        }
        let inside = &x * &(&inner_sum + &constant);
        report.check(inside == rhs, || {
            (
                format!("part 2, n={n}"),
                format!("x(Σ∫ + ⌈n/2⌉) = {inside} but F_(n+1)+F_n-1 = {rhs}"),
            )
        });
        let outside = &(&x * &inner_sum) + &constant;
        if outside != rhs && outside_first_fail.is_none() {
            outside_first_fail = Some(n);
        }
    }
    report.note(
        "part 2 closes with the total constant ⌈n/2⌉ added inside the factor x(...)",
    );
    match outside_first_fail {
        Some(n) => report.note(format!(
            "adding the constant outside, x·Σ∫ + ⌈n/2⌉, first fails at n={n}"
        )),
        None => report.note("the constant-outside reading also holds on this range".into()),
    }
    match short_bound_first_fail {
        Some(n) => report.note(format!(
            "truncating the outer sum to r <= n-1 first fails at n={n}"
        )),
        None => report.note("the r <= n-1 outer bound also holds on this range".into()),
    }
    report
}

/// Checks the parallels identity over the grid `i <= i_max`,
/// `k + j <= r <= r_max`, using the exponent `g^i`. For `i >= 2` the
/// single-`γ` variant is evaluated alongside and the first anchor where it
/// diverges is recorded.
pub fn verify_parallels(seq: &GfpSequence, i_max: usize, r_max: usize) -> VerificationReport {
    let spec = seq.spec();
    let mut report = VerificationReport::new("parallels")
        .with_param("family", spec.label())
        .with_param("i_max", i_max)
        .with_param("r_max", r_max);
    let h = |r: usize, k: usize| &seq.term(k) * &seq.term(r - k);
    let mut single_gamma_first_fail: Option<(usize, usize, usize, usize)> = None;
    for i in 0..=i_max {
        let factor = sign_pow(spec.g(), i);
        let single_factor = if i % 2 == 1 {
            -spec.g()
        } else {
            spec.g().clone()
        };
        for r in 0..=r_max {
            for k in 0..=r {
                for j in 0..=(r - k) {
                    let diff_high = &h(r + 2 * i, k + j + i) - &h(r + 2 * i, k + i);
                    let diff_low = &h(r, k + j) - &h(r, k);
                    let rhs = &factor * &diff_low;
                    report.check(diff_high == rhs, || {
                        (
                            format!("(i,j,k,r)=({i},{j},{k},{r})"),
                            format!("row difference {diff_high} != (-1)^i g^i ({diff_low})"),
                        )
                    });
                    if i >= 2
                        && single_gamma_first_fail.is_none()
                        && diff_high != &single_factor * &diff_low
                    {
                        single_gamma_first_fail = Some((i, j, k, r));
                    }
                }
            }
        }
    }
    match single_gamma_first_fail {
        Some((i, j, k, r)) => report.note(format!(
            "exponent resolution: g^i closes the identity; a single γ factor first fails at \
             (i,j,k,r)=({i},{j},{k},{r})"
        )),
        None if i_max >= 2 => {
            report.note("g^i and a single γ agree everywhere on this range (γ^i = γ)")
        }
        None => {}
    }
    report
}

/// One Johnson instance: requires `a + b = c + d` and `min{a,b,c,d} >= t`.
pub fn johnson_instance(
    seq: &GfpSequence,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    t: usize,
) -> Result<bool, IdentityError> {
    if a + b != c + d {
        return Err(IdentityError::ConstraintViolation(format!(
            "a+b = {} but c+d = {}",
            a + b,
            c + d
        )));
    }
    let min = a.min(b).min(c).min(d);
    if min < t {
        return Err(IdentityError::ConstraintViolation(format!(
            "t = {t} exceeds min index {min}"
        )));
    }
    let det = |i: usize, j: usize, k: usize, l: usize| {
        &(&seq.term(i) * &seq.term(j)) - &(&seq.term(k) * &seq.term(l))
    };
    let lhs = det(a, b, c, d);
    let rhs = &sign_pow(seq.spec().g(), t) * &det(a - t, b - t, c - t, d - t);
    Ok(lhs == rhs)
}

/// Seeded random sweep of the Johnson identity with indices `<= max_index`.
pub fn verify_johnson(
    seq: &GfpSequence,
    trials: usize,
    max_index: usize,
    seed: u64,
) -> VerificationReport {
    let mut report = VerificationReport::new("johnson")
        .with_param("family", seq.spec().label())
        .with_param("trials", trials)
        .with_param("max_index", max_index)
        .with_param("seed", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let a = rng.gen_range(0..=max_index);
        let b = rng.gen_range(0..=max_index);
        let s = a + b;
        let c_lo = s.saturating_sub(max_index);
        let c_hi = s.min(max_index);
        let c = rng.gen_range(c_lo..=c_hi);
        let d = s - c;
        let t = rng.gen_range(0..=a.min(b).min(c).min(d));
        let ok = johnson_instance(seq, a, b, c, d, t).expect("sampled instance is valid");
        report.check(ok, || {
            (
                format!("(a,b,c,d,t)=({a},{b},{c},{d},{t})"),
                "determinant identity violated".into(),
            )
        });
    }
    report
}

/// Exhaustive Catalan (`r <= m <= m_max`) and Cassini (`r = 1`) checks:
///
/// ```text
/// G_m^2 - G_{m+r} G_{m-r} = (-1)^{m-r} g^{m-r} (G_r^2 - G_{2r} G_0)
/// ```
pub fn verify_catalan_cassini(seq: &GfpSequence, m_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new("catalan-cassini")
        .with_param("family", seq.spec().label())
        .with_param("m_max", m_max);
    for m in 0..=m_max {
        for r in 0..=m {
            let gm = seq.term(m);
            let lhs = &(&gm * &gm) - &(&seq.term(m + r) * &seq.term(m - r));
            let gr = seq.term(r);
            let inner = &(&gr * &gr) - &(&seq.term(2 * r) * &seq.term(0));
            let rhs = &sign_pow(seq.spec().g(), m - r) * &inner;
            let label = if r == 1 { "cassini" } else { "catalan" };
            report.check(lhs == rhs, || {
                (
                    format!("{label} (m,r)=({m},{r})"),
                    format!("lhs = {lhs}, rhs = {rhs}"),
                )
            });
        }
    }
    report
}

/// The two square-sum identities for Fibonacci-type sequences:
///
/// ```text
/// Σ_{j=2}^{2n+1} I(j) G_j^2           = Σ_{j=1}^{n} G_{4j+1}
/// Σ_{j=2}^{2n+1} (-1)^{j+1} I(j)^2 G_{2j}^2 = d Σ_{j=1}^{n} G_{8j+2}
/// ```
///
/// The literal second sum regroups into the pairs
/// `Σ_{j=1}^{n} (G_{4j+2}^2 - g^2 G_{4j}^2)`; both forms are computed and
/// their agreement recorded.
pub fn verify_sums(seq: &GfpSequence, n_max: usize) -> Result<VerificationReport, IdentityError> {
    let spec = seq.spec();
    if spec.kind() != GfpKind::FibonacciType {
        return Err(IdentityError::NotFibonacciType);
    }
    let mut report = VerificationReport::new("sums")
        .with_param("family", spec.label())
        .with_param("n_max", n_max);
    let g = spec.g();
    let square = |i: usize| {
        let t = seq.term(i);
        &t * &t
    };
    let mut pairing_always_matches = true;
    for n in 1..=n_max {
        let mut lhs1 = IntPolynomial::zero();
        for j in 2..=2 * n + 1 {
            lhs1 = &lhs1 + &(&parity_weight(g, j) * &square(j));
        }
        let mut rhs1 = IntPolynomial::zero();
        for j in 1..=n {
            rhs1 = &rhs1 + &seq.term(4 * j + 1);
        }
        report.check(lhs1 == rhs1, || {
            (
                format!("squares n={n}"),
                format!("Σ I(j) G_j^2 = {lhs1} but Σ G_(4j+1) = {rhs1}"),
            )
        });

        let mut lhs2 = IntPolynomial::zero();
        for j in 2..=2 * n + 1 {
            let w = parity_weight(g, j);
            let term = &(&w * &w) * &square(2 * j);
            lhs2 = if (j + 1) % 2 == 1 { &lhs2 - &term } else { &lhs2 + &term };
        }
        let mut paired = IntPolynomial::zero();
        let g2 = g * g;
        for j in 1..=n {
            paired = &paired + &(&square(4 * j + 2) - &(&g2 * &square(4 * j)));
        }
        if lhs2 != paired {
            pairing_always_matches = false;
        }
        let mut rhs2 = IntPolynomial::zero();
        for j in 1..=n {
            rhs2 = &rhs2 + &seq.term(8 * j + 2);
        }
        let rhs2 = spec.d() * &rhs2;
        report.check(lhs2 == rhs2, || {
            (
                format!("alternating n={n}"),
                format!("Σ (-1)^(j+1) I(j)^2 G_(2j)^2 = {lhs2} but d Σ G_(8j+2) = {rhs2}"),
            )
        });
    }
    report.note(if pairing_always_matches {
        "the literal bounds j=2..2n+1 regroup exactly into the n pairs (G_(4j+2)^2 - g^2 G_(4j)^2)"
            .to_string()
    } else {
        "literal bounds and pairwise regrouping DISAGREE on this range".to_string()
    });
    Ok(report)
}

/// Central-column product identity, valid for every GFP sequence:
/// `Σ_{j=1}^{n} d g^{n-j} G_j^2 = G_{n+1} G_n - g^n G_1 G_0`.
pub fn verify_diagonal_sum_identity(seq: &GfpSequence, n_max: usize) -> VerificationReport {
    let spec = seq.spec();
    let mut report = VerificationReport::new("diagonal-sum")
        .with_param("family", spec.label())
        .with_param("n_max", n_max);
    for n in 1..=n_max {
        let mut lhs = IntPolynomial::zero();
        for j in 1..=n {
            let t = seq.term(j);
            lhs = &lhs + &(&spec.g().pow(n - j) * &(&t * &t));
        }
        let lhs = spec.d() * &lhs;
        let rhs = &(&seq.term(n + 1) * &seq.term(n))
            - &(&spec.g().pow(n) * &(&seq.term(1) * &seq.term(0)));
        report.check(lhs == rhs, || {
            (
                format!("n={n}"),
                format!("d Σ g^(n-j) G_j^2 = {lhs} but G_(n+1)G_n - g^n G_1 G_0 = {rhs}"),
            )
        });
    }
    report
}

/// Closed forms for the sums of [`verify_sums`], cross-multiplied by `d`:
///
/// part 1: `d Σ_{j=1}^{n} g^{2(n-j)} G_{4j-3} = G_{2n-1} G_{2n}`;
/// part 2 (only when `g = 1`): `d Σ_{j=1}^{2n-1} I(j) G_j^2 = G_{2n-1} G_{2n}`.
///
/// Part 2 is skipped with a note when `g != 1`; the central-column identity
/// behind both proofs is re-checked standalone.
pub fn verify_closed_sums(
    seq: &GfpSequence,
    n_max: usize,
) -> Result<VerificationReport, IdentityError> {
    let spec = seq.spec();
    if spec.kind() != GfpKind::FibonacciType {
        return Err(IdentityError::NotFibonacciType);
    }
    let mut report = VerificationReport::new("closed-sums")
        .with_param("family", spec.label())
        .with_param("n_max", n_max);
    for n in 1..=n_max {
        let mut sum = IntPolynomial::zero();
        for j in 1..=n {
            sum = &sum + &(&spec.g().pow(2 * (n - j)) * &seq.term(4 * j - 3));
        }
        let lhs = spec.d() * &sum;
        let rhs = &seq.term(2 * n - 1) * &seq.term(2 * n);
        report.check(lhs == rhs, || {
            (
                format!("part 1, n={n}"),
                format!("d Σ g^(2(n-j)) G_(4j-3) = {lhs} but G_(2n-1) G_(2n) = {rhs}"),
            )
        });
    }
    if spec.g().is_one() {
        match verify_closed_sums_unit_g(seq, n_max) {
            Ok(part2) => report.absorb(part2),
            Err(e) => report.fail_case("part 2", e.to_string()),
        }
    } else {
        for _ in 1..=n_max {
            report.skip_case();
        }
        report.note(format!("part 2 skipped: requires g = 1, here g = {}", spec.g()));
    }
    report.absorb(verify_diagonal_sum_identity(seq, n_max));
    Ok(report)
}

/// Part 2 of the closed sums on its own; errors unless `g = 1`.
pub fn verify_closed_sums_unit_g(
    seq: &GfpSequence,
    n_max: usize,
) -> Result<VerificationReport, IdentityError> {
    let spec = seq.spec();
    if spec.kind() != GfpKind::FibonacciType {
        return Err(IdentityError::NotFibonacciType);
    }
    if !spec.g().is_one() {
        return Err(IdentityError::RequiresUnitG);
    }
    let mut report = VerificationReport::new("closed-sums-unit-g")
        .with_param("family", spec.label())
        .with_param("n_max", n_max);
    for n in 1..=n_max {
        let mut sum = IntPolynomial::zero();
        for j in 1..=2 * n - 1 {
            let t = seq.term(j);
            sum = &sum + &(&parity_weight(spec.g(), j) * &(&t * &t));
        }
        let lhs = spec.d() * &sum;
        let rhs = &seq.term(2 * n - 1) * &seq.term(2 * n);
        report.check(lhs == rhs, || {
            (
                format!("part 2, n={n}"),
                format!("d Σ I(j) G_j^2 = {lhs} but G_(2n-1) G_(2n) = {rhs}"),
            )
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Outcome;
    use crate::triangle::{to_rect, HosoyaTriangle};

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    fn fib() -> GfpSequence {
        GfpSequence::builtin(Family::Fibonacci)
    }

    #[test]
    fn derivative_hand_cases() {
        let f = fib();
        assert_eq!(f.term(4).derivative(), p("3*x^2+2"));
        assert_eq!(fibonacci_row_sum(&f, 4), p("3*x^2+2"));
        assert_eq!(fibonacci_row_sum(&f, 2), p("1"));
        assert_eq!(fibonacci_row_sum(&f, 3), p("2*x"));
        let report = verify_derivative_identity(20);
        assert_eq!(report.outcome, Outcome::Pass, "{report}");
    }

    #[test]
    fn integral_part1_hand_cases() {
        // n=3: ∫(F1F2 + F2F1) = ∫2x = x^2, plus C=1 gives F3.
        let f = fib();
        let anti = fibonacci_row_sum(&f, 3).integrate(0).unwrap();
        assert_eq!(&anti + &IntPolynomial::one(), f.term(3));
        // n=2: ∫F1F1 = x with C=0 gives F2.
        let anti = fibonacci_row_sum(&f, 2).integrate(0).unwrap();
        assert_eq!(anti, f.term(2));
    }

    #[test]
    fn integral_identities_sweep_and_notes() {
        let report = verify_integral_identities(16);
        assert_eq!(report.outcome, Outcome::Pass, "{report}");
        assert!(report.notes.iter().any(|n| n.contains("inside the factor")));
        assert!(report
            .notes
            .iter()
            .any(|n| n.contains("outside") && n.contains("n=1")));
        assert!(report
            .notes
            .iter()
            .any(|n| n.contains("r <= n-1") && n.contains("n=2")));
    }

    #[test]
    fn parallels_identity_and_exponent_resolution() {
        let report = verify_parallels(&fib(), 3, 8);
        assert_eq!(report.outcome, Outcome::Pass, "{report}");

        // γ = -2: the single-γ reading must break at some i >= 2.
        let fermat = GfpSequence::builtin(Family::Fermat);
        let report = verify_parallels(&fermat, 3, 8);
        assert_eq!(report.outcome, Outcome::Pass, "{report}");
        assert!(
            report.notes.iter().any(|n| n.contains("single γ factor first fails")),
            "{:?}",
            report.notes
        );

        // γ = -1: single γ also fails for even i since γ^2 = 1 != γ.
        let vieta = GfpSequence::builtin(Family::Vieta);
        let report = verify_parallels(&vieta, 2, 6);
        assert!(report.notes.iter().any(|n| n.contains("first fails")));
    }

    #[test]
    fn johnson_hand_case() {
        // F3^2 - F2 F4 = 1 and the t=1 reduction gives -(F2^2 - F1 F3) = 1.
        let f = fib();
        assert!(johnson_instance(&f, 3, 3, 2, 4, 1).unwrap());
        assert!(johnson_instance(&f, 5, 5, 5, 5, 3).unwrap());
        assert!(matches!(
            johnson_instance(&f, 3, 3, 2, 5, 0),
            Err(IdentityError::ConstraintViolation(_))
        ));
        assert!(matches!(
            johnson_instance(&f, 3, 3, 2, 4, 3),
            Err(IdentityError::ConstraintViolation(_))
        ));
    }

    #[test]
    fn johnson_seeded_sweeps() {
        for fam in [Family::Fibonacci, Family::Pell, Family::JacobsthalLucas] {
            let seq = GfpSequence::builtin(fam);
            let report = verify_johnson(&seq, 200, 30, 0xFEED);
            assert_eq!(report.outcome, Outcome::Pass, "{fam}: {report}");
        }
    }

    #[test]
    fn johnson_summands_form_a_rectangle() {
        // The four products in the determinant sit on two triangle rows.
        let (a, b, c, d, t) = (5usize, 7, 4, 8, 2);
        assert_eq!(a + b, c + d);
        let seq = fib();
        let tri = HosoyaTriangle::build(&seq, a + b);
        for (i, j) in [(a, b), (c, d), (a - t, b - t), (c - t, d - t)] {
            let (r, k) = to_rect(i, j);
            assert_eq!(tri.entry(r, k).unwrap(), &(&seq.term(i) * &seq.term(j)));
        }
        let rows: Vec<usize> = [(a, b), (c, d), (a - t, b - t), (c - t, d - t)]
            .iter()
            .map(|&(i, j)| to_rect(i, j).0)
            .collect();
        assert_eq!(rows[0], rows[1]);
        assert_eq!(rows[2], rows[3]);
        assert_eq!(rows[0] - rows[2], 2 * t);
    }

    #[test]
    fn cassini_and_catalan_hand_cases() {
        let f = fib();
        // Cassini at m=2: F2^2 - F1 F3 = -1.
        let lhs = &(&f.term(2) * &f.term(2)) - &(&f.term(1) * &f.term(3));
        assert_eq!(lhs, p("-1"));
        let report = verify_catalan_cassini(&f, 20);
        assert_eq!(report.outcome, Outcome::Pass, "{report}");
        // Catalan r=0 is the 0 = 0 degenerate case, counted but trivial.
        let vieta = GfpSequence::builtin(Family::VietaLucas);
        let report = verify_catalan_cassini(&vieta, 20);
        assert_eq!(report.outcome, Outcome::Pass, "{report}");
    }

    #[test]
    fn sums_theorem() {
        // n=1: g F2^2 + F3^2 = x^2 + (x^2+1)^2 = F5.
        let f = fib();
        let lhs = &(&f.term(2) * &f.term(2)) + &(&f.term(3) * &f.term(3));
        assert_eq!(lhs, f.term(5));
        for fam in [Family::Fibonacci, Family::Jacobsthal, Family::Chebyshev2] {
            let seq = GfpSequence::builtin(fam);
            let report = verify_sums(&seq, 8).unwrap();
            assert_eq!(report.outcome, Outcome::Pass, "{fam}: {report}");
            assert!(report.notes.iter().any(|n| n.contains("regroup exactly")));
        }
        assert!(matches!(
            verify_sums(&GfpSequence::builtin(Family::Lucas), 3),
            Err(IdentityError::NotFibonacciType)
        ));
    }

    #[test]
    fn diagonal_sum_identity_all_kinds() {
        for fam in Family::ALL {
            let seq = GfpSequence::builtin(fam);
            let report = verify_diagonal_sum_identity(&seq, 10);
            assert_eq!(report.outcome, Outcome::Pass, "{fam}: {report}");
        }
        // Lucas n=1 by hand: d G_1^2 = x^3 and G_2 G_1 - g G_1 G_0 = x^3.
        let lucas = GfpSequence::builtin(Family::Lucas);
        let lhs = &lucas.spec().d().clone() * &(&lucas.term(1) * &lucas.term(1));
        assert_eq!(lhs, p("x^3"));
    }

    #[test]
    fn closed_sums() {
        // Part 1, n=1: d g^0 G_1 = x = F_1 F_2.
        let f = fib();
        let report = verify_closed_sums(&f, 10).unwrap();
        assert_eq!(report.outcome, Outcome::Pass, "{report}");

        let pell = GfpSequence::builtin(Family::Pell);
        let report = verify_closed_sums_unit_g(&pell, 10).unwrap();
        assert_eq!(report.outcome, Outcome::Pass, "{report}");

        let fermat = GfpSequence::builtin(Family::Fermat);
        assert!(matches!(
            verify_closed_sums_unit_g(&fermat, 5),
            Err(IdentityError::RequiresUnitG)
        ));
        let report = verify_closed_sums(&fermat, 8).unwrap();
        assert_eq!(report.outcome, Outcome::Pass, "{report}");
        assert!(report.notes.iter().any(|n| n.contains("part 2 skipped")));
    }
}
