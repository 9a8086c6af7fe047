//! Star-of-David configurations in Hosoya polynomial triangles.
//!
//! Six triangle entries around a center form two interlocking triangles
//! `Δa = {a1, a2, a3}` and `Δb = {b1, b2, b3}`. In diagonal coordinates,
//! anchoring at `(m, n)` gives two orientations:
//!
//! ```text
//! orientation A (anchor = a2):          orientation B (anchor = b2):
//! a1 = G_{m+1} G_{n-2}                  a1 = G_m     G_{n-1}
//! a2 = G_m     G_n                      a2 = G_{m-2} G_{n-2}
//! a3 = G_{m+2} G_{n-1}                  a3 = G_{m-1} G_n
//! b1 = G_m     G_{n-1}                  b1 = G_{m-1} G_{n-2}
//! b2 = G_{m+2} G_{n-2}                  b2 = G_m     G_n
//! b3 = G_{m+1} G_n                      b3 = G_{m-2} G_{n-1}
//! c  = G_{m+1} G_{n-1}                  c  = G_{m-1} G_{n-1}
//! ```
//!
//! The triple products always coincide (Hoggatt-Hansell). The triple GCDs
//! coincide except in one parity class per type, where they differ by a
//! rational constant: for Fibonacci type with `n = 2k1`, `m = 2k2` both
//! even, `gcd(Δa) = β gcd(Δb)` with
//! `β = gcd(d, k1-1, k2+1) / gcd(d, k1, k2)` (orientation A), and for Lucas
//! type with `m, n` both odd, `gcd(Δa) = β' gcd(Δb)` with
//! `β' = gcd(G*_1, n-2, m+2) / gcd(G*_1, n, m)`. Mixed gcds of a polynomial
//! with integers reduce to integer gcds of its content, and β/β' are never
//! divided out: the identities are checked cross-multiplied in exact
//! integers as `u · gcd(Δa) = v · gcd(Δb)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::gfp::{Family, GfpKind, GfpSequence};
use crate::poly::IntPolynomial;
use crate::report::VerificationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StarError {
    #[error("no {orientation} star at anchor ({m}, {n}): out of bounds")]
    OutOfBounds {
        orientation: Orientation,
        m: usize,
        n: usize,
    },
    #[error("star at anchor ({m}, {n}) puts a vertex on the apex G_0 G_0")]
    DegenerateCenter { m: usize, n: usize },
    #[error("GCD star theorem requires a theorem-grade sequence")]
    NotTheoremGrade,
    #[error("star verification requires a Lucas- or Fibonacci-type sequence")]
    NotTyped,
    #[error("gcd(a1,b3)gcd(b1,a3) at ({m}, {n}) matches none of c, c*G_t, c*G_t^2")]
    UnclassifiedPart4 { m: usize, n: usize },
    #[error("family {0} is not covered by any of the GCD-property corollaries")]
    FamilyNotCovered(String),
}

/// Which of the two star layouts is meant; `A` anchors at `a2`, `B` at `b2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    A,
    B,
}

impl Orientation {
    pub const BOTH: [Orientation; 2] = [Orientation::A, Orientation::B];
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::A => "a",
            Orientation::B => "b",
        })
    }
}

impl FromStr for Orientation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(Orientation::A),
            "b" => Ok(Orientation::B),
            other => Err(format!("unknown orientation `{other}` (expected a or b)")),
        }
    }
}

impl Serialize for Orientation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The seven entries of one star.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarConfig {
    pub orientation: Orientation,
    /// Diagonal coordinates of the anchor (`a2` for A, `b2` for B).
    pub anchor: (usize, usize),
    pub a: [IntPolynomial; 3],
    pub b: [IntPolynomial; 3],
    pub center: IntPolynomial,
}

/// How the two triple gcds relate at this anchor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RatioClass {
    Equal,
    ScaledByBeta,
    ScaledByBetaPrime,
}

/// Classification of `gcd(a1,b3) gcd(b1,a3)` as `c * G_t^e`, `e <= 2`,
/// with `t = 1` for Lucas type and `t = 2` for Fibonacci type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Part4Report {
    /// `"c"`, `"c*G_t"`, or `"c*G_t^2"`.
    pub class: String,
    pub t: usize,
    #[serde(skip)]
    pub exponent: u8,
}

/// Everything verified about one star, in the stable JSON shape.
#[derive(Debug, Clone, Serialize)]
pub struct StarReport {
    pub family: String,
    pub orientation: Orientation,
    pub anchor: [usize; 2],
    pub product_equal: bool,
    pub gcd_a: IntPolynomial,
    pub gcd_b: IntPolynomial,
    pub ratio_class: RatioClass,
    /// `[u, v]` with `u * gcd_a = v * gcd_b`; `[1, 1]` in the equal class.
    pub beta: [u64; 2],
    /// `None` when the product matched no class (a reportable finding).
    pub part4: Option<Part4Report>,
}

impl StarReport {
    /// The cross-multiplied GCD identity `u * gcd_a = v * gcd_b`.
    pub fn gcd_identity_holds(&self) -> bool {
        self.gcd_a.scale(&BigInt::from(self.beta[0]))
            == self.gcd_b.scale(&BigInt::from(self.beta[1]))
    }
}

/// Builds the star anchored at diagonal coordinates `(m, n)`.
///
/// Orientation A needs `n >= 2`; orientation B needs `m >= 2` and `n >= 2`
/// and additionally rejects `(2, 2)`, whose `a2` vertex would sit on the
/// apex position `G_0 G_0`.
pub fn make_star(
    seq: &GfpSequence,
    orientation: Orientation,
    m: usize,
    n: usize,
) -> Result<StarConfig, StarError> {
    let g = |i: usize, j: usize| &seq.term(i) * &seq.term(j);
    match orientation {
        Orientation::A => {
            if n < 2 {
                return Err(StarError::OutOfBounds { orientation, m, n });
            }
            Ok(StarConfig {
                orientation,
                anchor: (m, n),
                a: [g(m + 1, n - 2), g(m, n), g(m + 2, n - 1)],
                b: [g(m, n - 1), g(m + 2, n - 2), g(m + 1, n)],
                center: g(m + 1, n - 1),
            })
        }
        Orientation::B => {
            if m < 2 || n < 2 {
                return Err(StarError::OutOfBounds { orientation, m, n });
            }
            if m == 2 && n == 2 {
                return Err(StarError::DegenerateCenter { m, n });
            }
            Ok(StarConfig {
                orientation,
                anchor: (m, n),
                a: [g(m, n - 1), g(m - 2, n - 2), g(m - 1, n)],
                b: [g(m - 1, n - 2), g(m, n), g(m - 2, n - 1)],
                center: g(m - 1, n - 1),
            })
        }
    }
}

/// The Hoggatt-Hansell product identity `a1 a2 a3 = b1 b2 b3`.
pub fn verify_product(star: &StarConfig) -> bool {
    let pa = &(&star.a[0] * &star.a[1]) * &star.a[2];
    let pb = &(&star.b[0] * &star.b[1]) * &star.b[2];
    pa == pb
}

fn gcd3_int(c: &BigInt, a: usize, b: usize) -> BigInt {
    c.gcd(&BigInt::from(a)).gcd(&BigInt::from(b))
}

fn to_u64(v: &BigInt) -> u64 {
    u64::try_from(v).expect("β components are bounded by the anchor indices")
}

/// The ratio class at an anchor, with the exact pair `(u, v)` such that
/// `u * gcd_a = v * gcd_b` is the claimed identity.
fn ratio_data(
    seq: &GfpSequence,
    kind: GfpKind,
    orientation: Orientation,
    m: usize,
    n: usize,
) -> (RatioClass, BigInt, BigInt) {
    let spec = seq.spec();
    match kind {
        GfpKind::FibonacciType if m % 2 == 0 && n % 2 == 0 => {
            let content = spec.d().content();
            let (k1, k2) = (n / 2, m / 2);
            let (u, v) = match orientation {
                Orientation::A => (
                    gcd3_int(&content, k1, k2),
                    gcd3_int(&content, k1 - 1, k2 + 1),
                ),
                Orientation::B => (
                    gcd3_int(&content, k1 - 1, k2 - 1),
                    gcd3_int(&content, k1, k2),
                ),
            };
            (RatioClass::ScaledByBeta, u, v)
        }
        GfpKind::LucasType if m % 2 == 1 && n % 2 == 1 => {
            let c1 = seq.term(1).content();
            let (u, v) = match orientation {
                Orientation::A => (gcd3_int(&c1, n, m), gcd3_int(&c1, n - 2, m + 2)),
                Orientation::B => (gcd3_int(&c1, n - 2, m - 2), gcd3_int(&c1, n, m)),
            };
            (RatioClass::ScaledByBetaPrime, u, v)
        }
        _ => (RatioClass::Equal, BigInt::from(1), BigInt::from(1)),
    }
}

fn part4_data(seq: &GfpSequence, kind: GfpKind, star: &StarConfig) -> Option<Part4Report> {
    let t = match kind {
        GfpKind::LucasType => 1,
        GfpKind::FibonacciType => 2,
        GfpKind::Other => return None,
    };
    let gt = seq.term(t);
    let product = &star.a[0].gcd(&star.b[2]) * &star.b[0].gcd(&star.a[2]);
    let mut candidate = star.center.clone();
    for exponent in 0u8..=2 {
        if product == candidate.canonical() {
            let class = match exponent {
                0 => "c".to_string(),
                1 => "c*G_t".to_string(),
                _ => "c*G_t^2".to_string(),
            };
            return Some(Part4Report {
                class,
                t,
                exponent,
            });
        }
        candidate = &candidate * &gt;
    }
    None
}

/// Computes the full report for a typed sequence without the theorem-grade
/// guard; the corollary sweeps need gcd data for families outside it.
fn star_report_unguarded(seq: &GfpSequence, star: &StarConfig) -> Result<StarReport, StarError> {
    let kind = seq.spec().kind();
    if kind == GfpKind::Other {
        return Err(StarError::NotTyped);
    }
    let (m, n) = star.anchor;
    let gcd_a = IntPolynomial::gcd_many(&star.a).expect("three vertices");
    let gcd_b = IntPolynomial::gcd_many(&star.b).expect("three vertices");
    let (ratio_class, u, v) = ratio_data(seq, kind, star.orientation, m, n);
    Ok(StarReport {
        family: seq.spec().label(),
        orientation: star.orientation,
        anchor: [m, n],
        product_equal: verify_product(star),
        gcd_a,
        gcd_b,
        ratio_class,
        beta: [to_u64(&u), to_u64(&v)],
        part4: part4_data(seq, kind, star),
    })
}

/// Verifies the GCD star theorem at one anchor: equal-class stars must have
/// identical gcds, scaled-class stars must satisfy the cross-multiplied
/// β/β' identity. Requires a typed, theorem-grade sequence.
pub fn verify_gcd_theorem(seq: &GfpSequence, star: &StarConfig) -> Result<StarReport, StarError> {
    if seq.spec().kind() == GfpKind::Other {
        return Err(StarError::NotTyped);
    }
    if !seq.spec().theorem_grade() {
        return Err(StarError::NotTheoremGrade);
    }
    star_report_unguarded(seq, star)
}

/// Classifies `gcd(a1,b3) gcd(b1,a3)` as `c`, `c G_t`, or `c G_t^2`.
///
/// Failure to classify would contradict the theorem and is surfaced as
/// an error rather than a report.
pub fn verify_part4(seq: &GfpSequence, star: &StarConfig) -> Result<Part4Report, StarError> {
    let kind = seq.spec().kind();
    if kind == GfpKind::Other {
        return Err(StarError::NotTyped);
    }
    let (m, n) = star.anchor;
    part4_data(seq, kind, star).ok_or(StarError::UnclassifiedPart4 { m, n })
}

/// All anchors of one orientation inside `m <= m_max`, `n <= n_max`.
fn anchors(orientation: Orientation, m_max: usize, n_max: usize) -> Vec<(usize, usize)> {
    let m_lo = match orientation {
        Orientation::A => 0,
        Orientation::B => 2,
    };
    let mut out = Vec::new();
    for m in m_lo..=m_max {
        for n in 2..=n_max {
            if orientation == Orientation::B && m == 2 && n == 2 {
                continue;
            }
            out.push((m, n));
        }
    }
    out
}

/// Sweeps every valid anchor, checking the product identity for all
/// families, and the GCD identity plus part-4 classification wherever the
/// theorem claims them (typed, theorem-grade sequences). For typed families
/// outside theorem grade the same quantities are computed and any deviation
/// is recorded as a note, not a failure.
pub fn sweep_stars(
    seq: &GfpSequence,
    orientations: &[Orientation],
    m_max: usize,
    n_max: usize,
) -> (Vec<StarReport>, VerificationReport) {
    let spec = seq.spec();
    let kind = spec.kind();
    let grade = spec.theorem_grade();
    let mut verification = VerificationReport::new("star")
        .with_param("family", spec.label())
        .with_param("m_max", m_max)
        .with_param("n_max", n_max);
    verification.set_param("kind", kind);
    verification.set_param("theorem_grade", grade);

    let mut reports = Vec::new();
    for &orientation in orientations {
        for (m, n) in anchors(orientation, m_max, n_max) {
            let star = match make_star(seq, orientation, m, n) {
                Ok(star) => star,
                Err(_) => {
                    verification.skip_case();
                    continue;
                }
            };
            let loc = |what: &str| format!("{what} orientation={orientation} anchor=({m},{n})");
            let product_equal = verify_product(&star);
            verification.check(product_equal, || {
                (loc("product"), "triple products differ".into())
            });
            if kind == GfpKind::Other {
                continue;
            }
            let report = star_report_unguarded(seq, &star).expect("typed kind");
            let gcd_ok = report.gcd_identity_holds();
            let part4_ok = report.part4.is_some();
            if grade {
                verification.check(gcd_ok, || {
                    (
                        loc("gcd"),
                        format!(
                            "{} * {} != {} * {} (class {:?})",
                            report.beta[0],
                            report.gcd_a,
                            report.beta[1],
                            report.gcd_b,
                            report.ratio_class
                        ),
                    )
                });
                verification.check(part4_ok, || {
                    (loc("part4"), "no exponent matches c*G_t^e".into())
                });
            } else {
                if !gcd_ok {
                    verification.note(format!(
                        "{}: gcd identity not satisfied (sequence is outside theorem grade)",
                        loc("gcd")
                    ));
                }
                if !part4_ok {
                    verification.note(format!(
                        "{}: unclassified (sequence is outside theorem grade)",
                        loc("part4")
                    ));
                }
            }
            reports.push(report);
        }
    }
    (reports, verification)
}

/// Families whose stars satisfy the unconditional GCD property.
const UNCONDITIONAL_GCD_FAMILIES: [Family; 8] = [
    Family::Fibonacci,
    Family::Lucas,
    Family::Jacobsthal,
    Family::JacobsthalLucas,
    Family::Chebyshev1,
    Family::PellLucasPrime,
    Family::MorganVoyceB,
    Family::MorganVoyceC,
];

/// Whether the modular hypotheses guaranteeing gcd equality hold at this
/// anchor for the conditional families.
fn modular_hypotheses(family: Family, orientation: Orientation, m: usize, n: usize) -> Option<bool> {
    match family {
        Family::Pell | Family::Chebyshev2 => {
            if m % 2 != 0 || n % 2 != 0 {
                return None;
            }
            let (k1, k2) = (n / 2, m / 2);
            Some((k1 * k2) % 4 != 0 && k1 % 2 != k2 % 2)
        }
        Family::Fermat => {
            if m % 2 != 0 || n % 2 != 0 {
                return None;
            }
            let (k1, k2) = (n / 2, m / 2);
            let shared = (k1 * k2) % 9 != 0;
            Some(match orientation {
                Orientation::A => shared && k1 % 3 != (2 * k2) % 3,
                Orientation::B => shared && ((k1 - 1) * (k2 - 1)) % 9 != 0,
            })
        }
        Family::FermatLucas => {
            let shared = (n * m) % 9 != 0;
            Some(match orientation {
                Orientation::A => shared && ((n - 2) * (m + 2)) % 9 != 0,
                Orientation::B => shared && ((n - 2) * (m - 2)) % 9 != 0,
            })
        }
        _ => None,
    }
}

/// Verifies the GCD-property corollaries for the covered families.
///
/// For the eight unconditional families, `gcd(Δa) = gcd(Δb)` at every valid
/// anchor. For Pell, Chebyshev second kind, Fermat and Fermat-Lucas (whose
/// β or β' can exceed 1) equality is asserted exactly on the anchors
/// satisfying the modular hypotheses; anchors outside them are skipped, and
/// any such anchor where the gcds actually differ is recorded as a
/// counterexample note showing the hypotheses are not vacuous.
pub fn verify_corollaries(
    seq: &GfpSequence,
    m_max: usize,
    n_max: usize,
) -> Result<VerificationReport, StarError> {
    let family = seq
        .spec()
        .family()
        .ok_or_else(|| StarError::FamilyNotCovered(seq.spec().label()))?;
    let unconditional = UNCONDITIONAL_GCD_FAMILIES.contains(&family);
    let conditional = matches!(
        family,
        Family::Pell | Family::Chebyshev2 | Family::Fermat | Family::FermatLucas
    );
    if !unconditional && !conditional {
        return Err(StarError::FamilyNotCovered(family.to_string()));
    }

    let mut report = VerificationReport::new(if unconditional {
        "star-gcd-unconditional"
    } else {
        "star-gcd-modular"
    })
    .with_param("family", family)
    .with_param("m_max", m_max)
    .with_param("n_max", n_max);

    let mut counterexamples = 0usize;
    for orientation in Orientation::BOTH {
        for (m, n) in anchors(orientation, m_max, n_max) {
            let star = make_star(seq, orientation, m, n).expect("anchor in bounds");
            let gcd_a = IntPolynomial::gcd_many(&star.a).expect("three vertices");
            let gcd_b = IntPolynomial::gcd_many(&star.b).expect("three vertices");
            let applies = if unconditional {
                true
            } else {
                match modular_hypotheses(family, orientation, m, n) {
                    Some(ok) => ok,
                    // Anchors outside the stated parity class are equal by
                    // the main theorem; assert them too.
                    None => true,
                }
            };
            if applies {
                report.check(gcd_a == gcd_b, || {
                    (
                        format!("orientation={orientation} anchor=({m},{n})"),
                        format!("gcd_a = {gcd_a}, gcd_b = {gcd_b}"),
                    )
                });
            } else {
                report.skip_case();
                if gcd_a != gcd_b && counterexamples < 3 {
                    counterexamples += 1;
                    report.note(format!(
                        "counterexample outside hypotheses: orientation={orientation} \
                         anchor=({m},{n}) gcd_a={gcd_a} gcd_b={gcd_b}"
                    ));
                }
            }
        }
    }
    if conditional && counterexamples == 0 {
        report.note(format!("no counterexample with m,n <= {}", m_max.max(n_max)));
    }
    Ok(report)
}
