//! Closed-form extremal edge counts.
//!
//! Every formula is evaluated in exact integer arithmetic and refuses
//! parameters outside the range where it is known to hold.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("{theorem}: parameters (a={a}, b={b}, {len_name}={len}) violate the precondition {requirement}")]
    OutOfRange {
        theorem: Theorem,
        a: usize,
        b: usize,
        len_name: &'static str,
        len: usize,
        requirement: &'static str,
    },
    #[error("no closed form covers {0}")]
    NoFormula(String),
    #[error("block parameters (a'={a_prime}, b'={b_prime}, l={l}, x={x}) violate {requirement}")]
    InvalidBlockParams {
        a_prime: usize,
        b_prime: usize,
        l: usize,
        x: usize,
        requirement: &'static str,
    },
}

/// The five extremal statements this crate evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// 2-connected, no cycle of length ≥ 2ℓ.
    Thm1,
    /// Connected, no path on k vertices.
    Thm2,
    /// Any bipartite graph, no `P_{2ℓ+2}`.
    GrsEven,
    /// Any bipartite graph, no `P_{2ℓ+3}`.
    GrsOdd,
    /// Any bipartite graph, no cycle of length ≥ 2ℓ.
    Jackson,
}

impl Theorem {
    pub const ALL: [Theorem; 5] = [
        Theorem::Thm1,
        Theorem::Thm2,
        Theorem::GrsEven,
        Theorem::GrsOdd,
        Theorem::Jackson,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Thm1 => "thm1",
            Theorem::Thm2 => "thm2",
            Theorem::GrsEven => "grs_even",
            Theorem::GrsOdd => "grs_odd",
            Theorem::Jackson => "jackson",
        }
    }

    /// Name of the length parameter the theorem is stated in.
    pub fn length_name(self) -> &'static str {
        match self {
            Theorem::Thm2 => "k",
            _ => "l",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown theorem `{s}`"))
    }
}

/// Forbidden family: all paths on `k` vertices, or all cycles of length at
/// least `2ℓ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Forbidden {
    Path { vertices: usize },
    LongCycles { half_length: usize },
}

impl fmt::Display for Forbidden {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Forbidden::Path { vertices } => write!(f, "P{vertices}"),
            Forbidden::LongCycles { half_length } => write!(f, "Cge{}", 2 * half_length),
        }
    }
}

impl FromStr for Forbidden {
    type Err = String;

    /// Accepts `P<k>` (k ≥ 1) and `Cge<2ℓ>` (even, ≥ 4).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(rest) = s.strip_prefix("Cge") {
            let len: usize = rest.parse().map_err(|_| format!("bad cycle length in `{s}`"))?;
            if len < 4 || len % 2 == 1 {
                return Err(format!("cycle length in `{s}` must be even and at least 4"));
            }
            Ok(Forbidden::LongCycles { half_length: len / 2 })
        } else if let Some(rest) = s.strip_prefix('P') {
            let k: usize = rest.parse().map_err(|_| format!("bad path length in `{s}`"))?;
            if k == 0 {
                return Err("path length must be at least 1".into());
            }
            Ok(Forbidden::Path { vertices: k })
        } else {
            Err(format!("unknown family `{s}`; expected P<k> or Cge<2l>"))
        }
    }
}

impl Serialize for Forbidden {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Forbidden {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Connectivity {
    Any,
    Connected,
    TwoConnected,
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Connectivity::Any => "any",
            Connectivity::Connected => "connected",
            Connectivity::TwoConnected => "two_connected",
        })
    }
}

impl FromStr for Connectivity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "any" => Ok(Connectivity::Any),
            "connected" => Ok(Connectivity::Connected),
            "two_connected" | "2-connected" => Ok(Connectivity::TwoConnected),
            _ => Err(format!("unknown connectivity class `{s}`")),
        }
    }
}

/// Everything that parameterizes one extremal problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtremalParams {
    pub a: usize,
    pub b: usize,
    pub family: Forbidden,
    pub connectivity: Connectivity,
}

impl ExtremalParams {
    pub fn new(a: usize, b: usize, family: Forbidden, connectivity: Connectivity) -> Self {
        Self {
            a,
            b,
            family,
            connectivity,
        }
    }

    /// The statement whose closed form applies to these parameters, with the
    /// length parameter in that statement's own convention.
    pub fn theorem(&self) -> Option<(Theorem, usize)> {
        match (self.family, self.connectivity) {
            (Forbidden::LongCycles { half_length }, Connectivity::TwoConnected) => Some((Theorem::Thm1, half_length)),
            (Forbidden::Path { vertices }, Connectivity::Connected) => Some((Theorem::Thm2, vertices)),
            (Forbidden::Path { vertices }, Connectivity::Any) if vertices >= 4 && vertices % 2 == 0 => {
                Some((Theorem::GrsEven, (vertices - 2) / 2))
            }
            (Forbidden::Path { vertices }, Connectivity::Any) if vertices >= 5 => {
                Some((Theorem::GrsOdd, (vertices - 3) / 2))
            }
            (Forbidden::LongCycles { half_length }, Connectivity::Any) => Some((Theorem::Jackson, half_length)),
            _ => None,
        }
    }

    pub fn formula(&self) -> Result<Evaluation, FormulaError> {
        let (theorem, len) = self.theorem().ok_or_else(|| {
            FormulaError::NoFormula(format!("{} with connectivity {}", self.family, self.connectivity))
        })?;
        evaluate(theorem, self.a, self.b, len)
    }
}

impl fmt::Display for ExtremalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(a={}, b={}, {}, {})",
            self.a, self.b, self.family, self.connectivity
        )
    }
}

/// A formula value together with the branch of the statement that produced
/// it. `value` is `None` only for the declared gap of [`Theorem::Jackson`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evaluation {
    pub theorem: Theorem,
    pub value: Option<usize>,
    pub branch: &'static str,
}

fn out_of_range(theorem: Theorem, a: usize, b: usize, len: usize, requirement: &'static str) -> FormulaError {
    FormulaError::OutOfRange {
        theorem,
        a,
        b,
        len_name: theorem.length_name(),
        len,
        requirement,
    }
}

pub fn evaluate(theorem: Theorem, a: usize, b: usize, len: usize) -> Result<Evaluation, FormulaError> {
    let (value, branch) = match theorem {
        Theorem::Thm1 => (Some(thm1_bound(a, b, len)?), "(l-2)b + 2(a-l+2)"),
        Theorem::Thm2 => (Some(thm2_bound(a, b, len)?), "floor((k-3)/2)b + a - floor((k-3)/2)"),
        Theorem::GrsEven => {
            let branch = grs_even_branch(a, b, len)?;
            (Some(branch.value(a, b, len)), branch.label())
        }
        Theorem::GrsOdd => {
            let branch = grs_odd_branch(a, b, len)?;
            (Some(branch.value(a, b, len)), branch.label())
        }
        Theorem::Jackson => {
            let value = jackson_cycle_bound(a, b, len)?;
            let branch = match value {
                None => "statement gap (a = 2l-1)",
                Some(_) if a <= 2 * len - 2 => "(b-1)(l-1) + a",
                Some(_) => "(a+b-2l+3)(l-1)",
            };
            (value, branch)
        }
    };
    Ok(Evaluation { theorem, value, branch })
}

/// Maximum edges of a 2-connected bipartite graph on classes `a ≤ b` with
/// no cycle of length ≥ 2ℓ, for `b ≥ a ≥ ℓ ≥ 4`: `(ℓ−2)b + 2(a−ℓ+2)`.
pub fn thm1_bound(a: usize, b: usize, l: usize) -> Result<usize, FormulaError> {
    if !(b >= a && a >= l && l >= 4) {
        return Err(out_of_range(Theorem::Thm1, a, b, l, "b >= a >= l >= 4"));
    }
    Ok((l - 2) * b + 2 * (a + 2 - l))
}

/// Half-width of the complete core in the connected path extremal graphs.
pub fn path_core_width(k: usize) -> usize {
    k.saturating_sub(3) / 2
}

/// `b ≥ a ≥ k/2 ≥ 4`, extended for odd `k` to `a = (k−1)/2` when `b > a`.
/// At `a = b = (k−1)/2` the complete graph has no `P_k` and beats the formula.
pub fn path_params_in_range(a: usize, b: usize, k: usize) -> bool {
    k >= 8 && b >= a && (2 * a >= k || (2 * a + 1 == k && b > a))
}

pub(crate) const PATH_RANGE: &str = "b >= a >= k/2 >= 4 (or k odd, a = (k-1)/2 < b)";

/// Maximum edges of a connected bipartite graph on classes `a ≤ b` with no
/// path on `k` vertices; see [`path_params_in_range`] for the range.
pub fn thm2_bound(a: usize, b: usize, k: usize) -> Result<usize, FormulaError> {
    if !path_params_in_range(a, b, k) {
        return Err(out_of_range(Theorem::Thm2, a, b, k, PATH_RANGE));
    }
    let t = path_core_width(k);
    Ok(t * b + (a - t))
}

/// Which piece of the piecewise path formulas applies; shared with the
/// constructions so that both follow the same precedence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrsBranch {
    /// `K_{a,b}` itself is extremal.
    Complete,
    /// `bℓ`: `K_{ℓ,b}` plus isolated A-vertices.
    FullCore,
    /// `a + (b−1)ℓ`: `K_{ℓ,b}` plus pendant A-vertices on one B-vertex.
    PendantCore,
    /// `2(ℓ+1)²`: two disjoint copies of `K_{ℓ+1,ℓ+1}`.
    TwoBalanced,
    /// `(a+b−2ℓ)ℓ`: `K_{ℓ,b−ℓ} ⊔ K_{a−ℓ,ℓ}`.
    SplitCores,
}

impl GrsBranch {
    pub fn value(self, a: usize, b: usize, l: usize) -> usize {
        match self {
            GrsBranch::Complete => a * b,
            GrsBranch::FullCore => b * l,
            GrsBranch::PendantCore => a + (b - 1) * l,
            GrsBranch::TwoBalanced => 2 * (l + 1) * (l + 1),
            GrsBranch::SplitCores => (a + b - 2 * l) * l,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            GrsBranch::Complete => "ab",
            GrsBranch::FullCore => "bl",
            GrsBranch::PendantCore => "a + (b-1)l",
            GrsBranch::TwoBalanced => "2(l+1)^2",
            GrsBranch::SplitCores => "(a+b-2l)l",
        }
    }
}

fn grs_pre(theorem: Theorem, a: usize, b: usize, l: usize) -> Result<(), FormulaError> {
    if a > b || a == 0 || l == 0 {
        return Err(out_of_range(theorem, a, b, l, "1 <= a <= b, l >= 1"));
    }
    Ok(())
}

/// Branch for `P_{2ℓ+2}`, taken in the listed order.
pub fn grs_even_branch(a: usize, b: usize, l: usize) -> Result<GrsBranch, FormulaError> {
    grs_pre(Theorem::GrsEven, a, b, l)?;
    Ok(if a <= l {
        GrsBranch::Complete
    } else if a <= 2 * l {
        GrsBranch::FullCore
    } else {
        GrsBranch::SplitCores
    })
}

/// Branch for `P_{2ℓ+3}`, taken in the listed order.
pub fn grs_odd_branch(a: usize, b: usize, l: usize) -> Result<GrsBranch, FormulaError> {
    grs_pre(Theorem::GrsOdd, a, b, l)?;
    let branch = if a <= l || (a == l + 1 && b == l + 1) {
        GrsBranch::Complete
    } else if a < 2 * (l + 1) && b != l + 1 {
        GrsBranch::PendantCore
    } else if a == 2 * (l + 1) && b == 2 * (l + 1) {
        GrsBranch::TwoBalanced
    } else if a >= 2 * (l + 1) && b != 2 * (l + 1) {
        GrsBranch::SplitCores
    } else {
        return Err(out_of_range(
            Theorem::GrsOdd,
            a,
            b,
            l,
            "a case of the piecewise statement",
        ));
    };
    Ok(branch)
}

/// `ex_b(a, b, P_{2ℓ+2})`.
pub fn grs_even(a: usize, b: usize, l: usize) -> Result<usize, FormulaError> {
    Ok(grs_even_branch(a, b, l)?.value(a, b, l))
}

/// `ex_b(a, b, P_{2ℓ+3})`.
pub fn grs_odd(a: usize, b: usize, l: usize) -> Result<usize, FormulaError> {
    Ok(grs_odd_branch(a, b, l)?.value(a, b, l))
}

/// `ex_b(a, b, C_{≥2ℓ})`, or `None` at `a = 2ℓ − 1`, which the statement
/// does not cover. Requires `ℓ − 1 ≤ a ≤ b`: for smaller `a` the complete
/// graph `K_{a,b}` already beats the first branch's value.
pub fn jackson_cycle_bound(a: usize, b: usize, l: usize) -> Result<Option<usize>, FormulaError> {
    if !(a <= b && l >= 2 && a + 1 >= l) {
        return Err(out_of_range(Theorem::Jackson, a, b, l, "l - 1 <= a <= b, l >= 2"));
    }
    Ok(if a <= 2 * l - 2 {
        Some((b - 1) * (l - 1) + a)
    } else if a >= 2 * l {
        Some((a + b + 3 - 2 * l) * (l - 1))
    } else {
        None
    })
}

/// Reduced parameters of the two-block edge count used when merging a
/// longest-cycle block with the rest of a connected graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlockBoundParams {
    pub a_prime: usize,
    pub b_prime: usize,
    /// Half-length of the longest cycle's block.
    pub x: usize,
    pub l: usize,
}

impl BlockBoundParams {
    /// Valid when `⌊(ℓ+1)/2⌋ ≤ x ≤ ℓ−2`, `ℓ−1 ≤ a' ≤ b'` and `ℓ ≤ b'`.
    pub fn new(a_prime: usize, b_prime: usize, l: usize, x: usize) -> Result<Self, FormulaError> {
        let invalid = |requirement| FormulaError::InvalidBlockParams {
            a_prime,
            b_prime,
            l,
            x,
            requirement,
        };
        if l < 4 || x < l.div_ceil(2) || x + 2 > l {
            return Err(invalid("floor((l+1)/2) <= x <= l-2"));
        }
        if a_prime + 1 < l || a_prime > b_prime || b_prime < l {
            return Err(invalid("l-1 <= a' <= b', l <= b'"));
        }
        Ok(Self { a_prime, b_prime, x, l })
    }

    /// `(ℓ−2)b' + a' − (ℓ−2)`, the value attained at `x = ℓ−2`.
    pub fn ceiling(&self) -> usize {
        (self.l - 2) * self.b_prime + self.a_prime + 2 - self.l
    }
}

/// `x(b' − (ℓ−x−2)) + (ℓ−x−1)(a' − x)`.
pub fn block_merge_bound(p: &BlockBoundParams) -> usize {
    let BlockBoundParams { a_prime, b_prime, x, l } = *p;
    x * (b_prime - (l - x - 2)) + (l - x - 1) * (a_prime - x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm1_examples() {
        assert_eq!(thm1_bound(4, 4, 4), Ok(12));
        assert_eq!(thm1_bound(5, 7, 5), Ok(25));
        for l in 4..12 {
            for b in l..l + 8 {
                assert_eq!(thm1_bound(l, b, l), Ok((l - 2) * b + 4));
            }
        }
        assert!(thm1_bound(3, 5, 4).is_err());
        assert!(thm1_bound(5, 4, 4).is_err());
        assert!(thm1_bound(3, 3, 3).is_err());
    }

    #[test]
    fn thm1_matches_half_integer_form() {
        // twice (l/2)(a+b) + (l/2 - 2)(b-a-4) - 4, kept in integers
        for l in 4..=12i64 {
            for a in l..l + 8 {
                for b in a..a + 8 {
                    let doubled = l * (a + b) + (l - 4) * (b - a - 4) - 8;
                    assert_eq!(doubled % 2, 0);
                    let got = thm1_bound(a as usize, b as usize, l as usize).unwrap() as i64;
                    assert_eq!(2 * got, doubled, "a={a} b={b} l={l}");
                }
            }
        }
    }

    #[test]
    fn thm2_examples() {
        assert_eq!(thm2_bound(4, 4, 8), Ok(10));
        assert_eq!(thm2_bound(4, 5, 9), Ok(16));
        assert!(thm2_bound(4, 4, 9).is_err());
        assert_eq!(thm2_bound(9, 12, 19), Ok(8 * 12 + 1));
        assert_eq!(thm2_bound(5, 6, 9), Ok(20));
        assert_eq!(thm2_bound(5, 6, 10), Ok(20));
        assert!(thm2_bound(3, 5, 6).is_err());
    }

    #[test]
    fn pendant_core_beats_one_smaller_double_attachment() {
        // (l-2)b + a - (l-2) >= (l-3)b + 2(a - (l-3)) whenever b >= a
        for l in 4..=12i64 {
            for a in 1..=26i64 {
                for b in a..=26 {
                    assert!(
                        (l - 2) * b + a - (l - 2) >= (l - 3) * b + 2 * (a - (l - 3)),
                        "a={a} b={b} l={l}"
                    );
                }
            }
        }
    }

    #[test]
    fn grs_examples() {
        assert_eq!(grs_even(3, 4, 2), Ok(8));
        assert_eq!(grs_even(2, 5, 2), Ok(10));
        assert_eq!(grs_even(4, 4, 2), Ok(8));
        assert_eq!(grs_odd(3, 4, 2), Ok(9));
        assert_eq!(grs_odd(6, 6, 2), Ok(18));
        assert_eq!(grs_odd(2, 5, 2), Ok(10));
        assert_eq!(grs_odd(2, 3, 1), Ok(4));
        assert_eq!(grs_odd(3, 3, 2), Ok(9));
        assert!(grs_even(5, 4, 2).is_err());
    }

    #[test]
    fn grs_even_seam_agrees() {
        for l in 1..10 {
            for b in 2 * l..2 * l + 10 {
                assert_eq!(b * l, (2 * l + b - 2 * l) * l);
                assert_eq!(grs_even(2 * l, b, l), Ok(b * l));
            }
        }
    }

    #[test]
    fn grs_odd_covers_every_pair() {
        for l in 1..6 {
            for a in 1..20 {
                for b in a..24 {
                    assert!(grs_odd(a, b, l).is_ok(), "a={a} b={b} l={l}");
                }
            }
        }
    }

    #[test]
    fn jackson_examples() {
        assert_eq!(jackson_cycle_bound(3, 4, 3), Ok(Some(9)));
        assert_eq!(jackson_cycle_bound(3, 3, 4), Ok(Some(9)));
        assert_eq!(jackson_cycle_bound(5, 6, 3), Ok(None));
        assert_eq!(jackson_cycle_bound(4, 4, 2), Ok(Some(7)));
        assert!(jackson_cycle_bound(1, 16, 5).is_err());
        let e = evaluate(Theorem::Jackson, 5, 6, 3).unwrap();
        assert_eq!(e.value, None);
    }

    #[test]
    fn block_merge_examples() {
        let p = BlockBoundParams::new(6, 8, 6, 3).unwrap();
        assert_eq!(block_merge_bound(&p), 27);
        assert_eq!(p.ceiling(), 34);
        let p = BlockBoundParams::new(5, 5, 5, 3).unwrap();
        assert_eq!(block_merge_bound(&p), 17);
        assert_eq!(p.ceiling(), 17);
        for l in 4..10 {
            let p = BlockBoundParams::new(l + 2, l + 5, l, l - 2).unwrap();
            assert_eq!(block_merge_bound(&p), p.ceiling());
        }
        assert!(BlockBoundParams::new(6, 8, 6, 2).is_err());
        assert!(BlockBoundParams::new(9, 8, 6, 3).is_err());
    }

    #[test]
    fn family_tokens() {
        assert_eq!("P8".parse(), Ok(Forbidden::Path { vertices: 8 }));
        assert_eq!("Cge6".parse(), Ok(Forbidden::LongCycles { half_length: 3 }));
        assert!("Cge7".parse::<Forbidden>().is_err());
        assert!("Q3".parse::<Forbidden>().is_err());
        assert_eq!(Forbidden::LongCycles { half_length: 4 }.to_string(), "Cge8");
    }

    #[test]
    fn params_pick_theorem() {
        let p = ExtremalParams::new(3, 4, "P6".parse().unwrap(), Connectivity::Any);
        assert_eq!(p.theorem(), Some((Theorem::GrsEven, 2)));
        let p = ExtremalParams::new(3, 4, "P7".parse().unwrap(), Connectivity::Any);
        assert_eq!(p.theorem(), Some((Theorem::GrsOdd, 2)));
        let p = ExtremalParams::new(4, 4, "Cge8".parse().unwrap(), Connectivity::TwoConnected);
        assert_eq!(p.formula().unwrap().value, Some(12));
        let p = ExtremalParams::new(4, 4, "P8".parse().unwrap(), Connectivity::TwoConnected);
        assert!(p.formula().is_err());
    }
}
