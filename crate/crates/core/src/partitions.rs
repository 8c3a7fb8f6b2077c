//! Integer partitions and the four families that appear in the identities.
//!
//! | family | definition |
//! |--------|------------|
//! | `N_i(n)` | neighborly: every part has another part at distance ≤ 1, multiplicities ≤ 2, parts ≥ 3−i |
//! | `T_i(n)` | parts pairwise differ by ≥ 2, parts ≥ 3−i |
//! | `E_i(n)` | every part ≡ ±(2+i) mod 5 |
//! | `R_i(n)` | distinct parts ≥ 3−i, each ≡ 0 or ±i mod 5 |
//!
//! The membership predicates (`is_neighborly`, ...) are the single source of truth.
//! Family enumerators use a pruned generator and then filter by the predicate, so
//! their output is always exactly `partitions_of(n)` filtered, in the same order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qseries::{inverse_one_minus, product_one_minus, Coeff, Order, SeriesQ};

/// Selects which of the two identities is in play. Parts are bounded below by
/// `3 - i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    One,
    Two,
}

impl Mode {
    pub const ALL: [Mode; 2] = [Mode::One, Mode::Two];

    pub const fn index(self) -> u32 {
        match self {
            Mode::One => 1,
            Mode::Two => 2,
        }
    }

    /// Smallest allowed part, `3 - i`.
    pub const fn min_part(self) -> u32 {
        3 - self.index()
    }

    /// `j ≡ 0, ±i (mod 5)` with `j ≥ 3 - i`: the exponents of the numerator
    /// product and the parts allowed in `R_i`.
    pub fn in_numerator_class(self, j: u32) -> bool {
        let i = self.index();
        j >= self.min_part() && matches!(j % 5, r if r == 0 || r == i || r == 5 - i)
    }

    /// `j ≡ ±(2+i) (mod 5)`: the parts allowed in `E_i`.
    pub fn in_product_class(self, j: u32) -> bool {
        let r = 2 + self.index();
        j > 0 && (j % 5 == r || j % 5 == 5 - r)
    }
}

impl TryFrom<u32> for Mode {
    type Error = Error;

    fn try_from(i: u32) -> Result<Self> {
        match i {
            1 => Ok(Mode::One),
            2 => Ok(Mode::Two),
            other => Err(Error::InvalidMode(other)),
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let i: u32 = s.trim().parse().map_err(|_| Error::InvalidMode(0))?;
        Mode::try_from(i)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// A non-increasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates that `parts` are positive and non-increasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                "parts must be non-increasing".into(),
            ));
        }
        Ok(Self { parts })
    }

    /// Accepts parts in any order and sorts them into canonical form.
    pub fn from_unordered(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|λ|`, the sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts.
    pub fn size(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn multiplicity(&self, part: u32) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// Distinct parts in decreasing order with their multiplicities.
    pub fn part_counts(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn max_multiplicity(&self) -> usize {
        self.part_counts().iter().map(|&(_, m)| m).max().unwrap_or(0)
    }

    /// `(-1)^size`.
    pub fn sign(&self) -> Coeff {
        if self.size().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Partition {
    /// `3+2+1`; the empty partition prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts in any order, e.g. `1,2,2,1`. An empty string is the
    /// empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_unordered(parts)
    }
}

/// Constraints used to prune the generator. Every constraint here must be implied
/// by the family predicate applied afterwards.
#[derive(Clone, Copy)]
struct Shape<'a> {
    min_part: u32,
    max_multiplicity: usize,
    /// Minimum difference between consecutive distinct parts (0 = no constraint).
    min_gap: u32,
    allowed: &'a dyn Fn(u32) -> bool,
}

impl Shape<'_> {
    const UNRESTRICTED: Shape<'static> = Shape {
        min_part: 1,
        max_multiplicity: usize::MAX,
        min_gap: 0,
        allowed: &|_| true,
    };
}

/// Emits partitions of `n` in lexicographically decreasing order.
fn generate(n: usize, shape: Shape<'_>) -> Vec<Partition> {
    fn rec(
        remaining: u32,
        max_part: u32,
        shape: &Shape<'_>,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let top = max_part.min(remaining);
        if top < shape.min_part {
            return;
        }
        for p in (shape.min_part..=top).rev() {
            if !(shape.allowed)(p) {
                continue;
            }
            if let Some(&last) = current.last() {
                if p == last {
                    let run = current.iter().rev().take_while(|&&q| q == p).count();
                    if run >= shape.max_multiplicity {
                        continue;
                    }
                } else if last - p < shape.min_gap {
                    continue;
                }
            }
            current.push(p);
            rec(remaining - p, p, shape, current, out);
            current.pop();
        }
    }

    let n = u32::try_from(n).expect("partition size fits in u32");
    let mut out = Vec::new();
    let mut current = Vec::new();
    rec(n, n, &shape, &mut current, &mut out);
    out
}

/// All partitions of `n`, lexicographically decreasing (`4, 3+1, 2+2, 2+1+1, 1+1+1+1`).
/// `n = 0` gives the single empty partition.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    generate(n, Shape::UNRESTRICTED)
}

/// Membership in `N_i`: every part has a neighbor (another part at distance ≤ 1),
/// no part occurs more than twice, and every part is at least `3 - i`.
pub fn is_neighborly(lambda: &Partition, mode: Mode) -> bool {
    let parts = lambda.parts();
    let has_neighbor = |j: usize| {
        parts
            .iter()
            .enumerate()
            .any(|(l, &p)| l != j && p.abs_diff(parts[j]) <= 1)
    };
    (0..parts.len()).all(has_neighbor)
        && lambda.max_multiplicity() <= 2
        && parts.iter().all(|&p| p >= mode.min_part())
}

/// Membership in `T_i`: no equal or consecutive parts, and part 1 appears at most
/// `i - 1` times.
pub fn is_t_partition(lambda: &Partition, mode: Mode) -> bool {
    let parts = lambda.parts();
    parts.windows(2).all(|w| w[0] >= w[1] + 2)
        && lambda.multiplicity(1) < mode.index() as usize
}

/// Membership in `E_i`: every part is `≡ ±(2+i) (mod 5)`.
pub fn is_e_partition(lambda: &Partition, mode: Mode) -> bool {
    lambda.parts().iter().all(|&p| mode.in_product_class(p))
}

/// Membership in `R_i`: distinct parts, each `≥ 3 - i` and `≡ 0, ±i (mod 5)`.
pub fn is_r_partition(lambda: &Partition, mode: Mode) -> bool {
    lambda.max_multiplicity() <= 1 && lambda.parts().iter().all(|&p| mode.in_numerator_class(p))
}

/// `N_i(n)`. Empty for `n = 0`: the family is only defined for positive `n`.
pub fn neighborly_partitions(n: usize, mode: Mode) -> Vec<Partition> {
    if n == 0 {
        return Vec::new();
    }
    let shape = Shape {
        min_part: mode.min_part(),
        max_multiplicity: 2,
        ..Shape::UNRESTRICTED
    };
    let mut out = generate(n, shape);
    out.retain(|p| is_neighborly(p, mode));
    out
}

/// `T_i(n)`; contains the empty partition when `n = 0`.
pub fn t_partitions(n: usize, mode: Mode) -> Vec<Partition> {
    let shape = Shape {
        min_part: mode.min_part(),
        max_multiplicity: 1,
        min_gap: 2,
        ..Shape::UNRESTRICTED
    };
    let mut out = generate(n, shape);
    out.retain(|p| is_t_partition(p, mode));
    out
}

/// `E_i(n)`; contains the empty partition when `n = 0`.
pub fn e_partitions(n: usize, mode: Mode) -> Vec<Partition> {
    let allowed = |p: u32| mode.in_product_class(p);
    let shape = Shape {
        allowed: &allowed,
        ..Shape::UNRESTRICTED
    };
    let mut out = generate(n, shape);
    out.retain(|p| is_e_partition(p, mode));
    out
}

/// `R_i(n)`. Empty for `n = 0`.
pub fn r_partitions(n: usize, mode: Mode) -> Vec<Partition> {
    if n == 0 {
        return Vec::new();
    }
    let allowed = |p: u32| mode.in_numerator_class(p);
    let shape = Shape {
        min_part: mode.min_part(),
        max_multiplicity: 1,
        min_gap: 1,
        allowed: &allowed,
    };
    let mut out = generate(n, shape);
    out.retain(|p| is_r_partition(p, mode));
    out
}

/// `Σ_{λ ∈ R_i(n)} (-1)^size(λ)`.
pub fn r_signed_count(n: usize, mode: Mode) -> Result<Coeff> {
    r_partitions(n, mode)
        .iter()
        .try_fold(0 as Coeff, |acc, p| acc.checked_add(p.sign()))
        .ok_or(Error::Overflow("r_signed_count"))
}

/// `Σ_h |T_i(h)| q^h`, counted by a dynamic program over the smallest part
/// rather than by enumeration.
pub fn gf_t(mode: Mode, order: Order) -> Result<SeriesQ> {
    let n_max = order.value();
    // count[n][m]: gap-two partitions of n whose parts are all >= m; m <= n_max + 2
    let width = n_max + 3;
    let mut count = vec![vec![0 as Coeff; width]; n_max + 1];
    count[0].iter_mut().for_each(|c| *c = 1);
    for n in 1..=n_max {
        for m in (1..width).rev() {
            let mut total: Coeff = if m + 1 < width { count[n][m + 1] } else { 0 };
            // smallest part exactly m, remaining parts >= m + 2
            if m <= n {
                let rest = count[n - m][(m + 2).min(width - 1)];
                total = total.checked_add(rest).ok_or(Error::Overflow("gf_t"))?;
            }
            count[n][m] = total;
        }
    }
    let m = mode.min_part() as usize;
    SeriesQ::from_coeffs((0..=n_max).map(|n| count[n][m]).collect())
}

/// `Σ_h |E_i(h)| q^h = ∏_{j ≡ ±(2+i) mod 5} 1 / (1 - q^j)`.
pub fn gf_e(mode: Mode, order: Order) -> Result<SeriesQ> {
    inverse_one_minus(
        (1..=order.value()).filter(|&j| mode.in_product_class(j as u32)),
        order,
    )
}

/// Sum side of the Rogers-Ramanujan identity for `mode`:
/// `Σ_k q^(k² + (2-i)k) / ((1-q)⋯(1-q^k))`; `i = 2` is the first identity,
/// `i = 1` the second. The `k = 0` term is 1.
pub fn rr_sum_side(mode: Mode, order: Order) -> Result<SeriesQ> {
    let n = order.value();
    let linear = (2 - mode.index()) as usize;
    let mut total = SeriesQ::zero(order);
    let mut denominator_inverse = SeriesQ::one(order);
    for k in 0.. {
        let exponent = k * k + linear * k;
        if exponent > n {
            break;
        }
        if k > 0 {
            denominator_inverse.div_one_minus_in_place(k)?;
        }
        total = total.try_add(&denominator_inverse.shift(exponent))?;
    }
    Ok(total)
}

/// `∏_{j ≥ 3-i, j ≡ 0,±i mod 5} (1 - q^j)`: the numerator of the product side,
/// and the right side of the signed neighborly identity.
pub fn rr_numerator(mode: Mode, order: Order) -> Result<SeriesQ> {
    product_one_minus(numerator_exponents(mode, order), order)
}

fn numerator_exponents(mode: Mode, order: Order) -> impl Iterator<Item = usize> {
    (1..=order.value()).filter(move |&j| mode.in_numerator_class(j as u32))
}

/// `∏_{j ≥ 3-i}` as exponent list, truncated to the order.
pub(crate) fn ladder_exponents(mode: Mode, order: Order) -> impl Iterator<Item = usize> + Clone {
    mode.min_part() as usize..=order.value()
}

/// Product side, unsimplified: numerator times `∏_{j ≥ 3-i} 1/(1 - q^j)`.
pub fn rr_product_side(mode: Mode, order: Order) -> Result<SeriesQ> {
    let numerator = rr_numerator(mode, order)?;
    let denominator_inverse = inverse_one_minus(ladder_exponents(mode, order), order)?;
    numerator.try_mul(&denominator_inverse)
}
