//! Named identity checks.
//!
//! Every identity is reduced to one or more [`Check`]s, each a pair of series that
//! must agree through the requested order. A failing check always carries a
//! [`Witness`]: the first disagreeing order and both coefficients.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::hilbert::{lemma_hilb_check, ladder_prefix, polarization_check, proposition_check, weighted_subgraph_series_at, WeightMap};
use crate::partitions::{gf_t, r_signed_count, rr_numerator, rr_product_side, rr_sum_side, Mode};
use crate::qseries::{Mismatch, Order, SeriesQ};
use crate::signature::{neighborly_signature_sum, signed_neighborly_gf, SignatureRoute};

/// Two series that must agree coefficientwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub left: SeriesQ,
    pub right: SeriesQ,
}

impl Check {
    pub fn new(label: impl Into<String>, left: SeriesQ, right: SeriesQ) -> Self {
        Self {
            label: label.into(),
            left,
            right,
        }
    }

    /// Compares through the smaller of the two orders.
    pub fn outcome(&self) -> std::result::Result<(), Mismatch> {
        let upto = self.left.order().min(self.right.order());
        self.left.eq_to_order(&self.right, upto)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    /// `Σ_{N_i(n)} δ(λ) = Σ_{R_i(n)} (-1)^size(λ)` for each `n`.
    Theorem,
    /// `Σ_{N_i} δ(λ) q^|λ| = ∏_{j ≥ 3-i, j ≡ 0,±i mod 5} (1 - q^j)`.
    Corollary,
    /// Sum side = product side = `Σ |T_i(n)| q^n`.
    RogersRamanujan,
    /// Ladder subgraph series at `z = -1` equals the signed neighborly series.
    LemmaEnumeration,
    /// `H_G = S_G(-1) / ∏ (1 - q^w)` on the ladder prefix.
    LemmaHilbert,
    /// `HP_P = HP_R / ∏ (1 - q^j)`.
    Polarization,
    /// `HP_P = Σ δ(λ) q^|λ| / ∏ (1 - q^j)²`.
    Proposition,
}

impl Identity {
    pub const ALL: [Identity; 7] = [
        Identity::Theorem,
        Identity::Corollary,
        Identity::RogersRamanujan,
        Identity::LemmaEnumeration,
        Identity::LemmaHilbert,
        Identity::Polarization,
        Identity::Proposition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Theorem => "theorem",
            Identity::Corollary => "corollary",
            Identity::RogersRamanujan => "rr",
            Identity::LemmaEnumeration => "lemma-enum",
            Identity::LemmaHilbert => "lemma-hilb",
            Identity::Polarization => "polarization",
            Identity::Proposition => "proposition",
        }
    }

    /// The series pairs for this identity at `mode` and `order`.
    pub fn checks(self, mode: Mode, order: Order, bounds: &Bounds) -> Result<Vec<Check>> {
        match self {
            Identity::Theorem => {
                // constant terms are both 1 by convention; the identity concerns n >= 1
                let n = order.value();
                let mut signed = vec![1];
                let mut signs = vec![1];
                for k in 1..=n {
                    signed.push(neighborly_signature_sum(k, mode, SignatureRoute::BruteForce, bounds)?);
                    signs.push(r_signed_count(k, mode)?);
                }
                Ok(vec![Check::new(
                    "sum of signatures over N_i(n) = signed count of R_i(n)",
                    SeriesQ::from_coeffs(signed)?,
                    SeriesQ::from_coeffs(signs)?,
                )])
            }
            Identity::Corollary => Ok(vec![Check::new(
                "signed neighborly series = numerator product",
                signed_neighborly_gf(mode, order, SignatureRoute::IndependencePolynomial, bounds)?,
                rr_numerator(mode, order)?,
            )]),
            Identity::RogersRamanujan => {
                let sum = rr_sum_side(mode, order)?;
                Ok(vec![
                    Check::new("sum side = product side", sum.clone(), rr_product_side(mode, order)?),
                    Check::new("sum side = T_i generating series", sum, gf_t(mode, order)?),
                ])
            }
            Identity::LemmaEnumeration => {
                let g = ladder_prefix(mode, order)?;
                let w = WeightMap::by_index(&g);
                Ok(vec![Check::new(
                    "ladder subgraph series at z=-1 = signed neighborly series",
                    weighted_subgraph_series_at(&g, &w, -1, order, bounds)?,
                    signed_neighborly_gf(mode, order, SignatureRoute::IndependencePolynomial, bounds)?,
                )])
            }
            Identity::LemmaHilbert => {
                let g = ladder_prefix(mode, order)?;
                let w = WeightMap::by_index(&g);
                Ok(vec![lemma_hilb_check(&g, &w, order, bounds)?])
            }
            Identity::Polarization => Ok(vec![polarization_check(mode, order)?]),
            Identity::Proposition => Ok(vec![proposition_check(mode, order, bounds)?]),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// First failing order of a failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub check: String,
    pub mismatch: Mismatch,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: first failure at order {}: left = {}, right = {}",
            self.check, self.mismatch.index, self.mismatch.left, self.mismatch.right
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: Identity,
    pub mode: Mode,
    pub order: Order,
    pub checks: usize,
    pub outcome: std::result::Result<(), Witness>,
    pub duration: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

/// Runs `identity` at `mode` through `order`.
pub fn run(identity: Identity, mode: Mode, order: Order, bounds: &Bounds) -> Result<VerificationReport> {
    run_with(identity, mode, order, bounds, |_| {})
}

/// As [`run`], letting `tamper` alter each check before comparison. Used to
/// exercise the failure path.
pub fn run_with<F>(
    identity: Identity,
    mode: Mode,
    order: Order,
    bounds: &Bounds,
    tamper: F,
) -> Result<VerificationReport>
where
    F: Fn(&mut Check),
{
    let start = Instant::now();
    let mut checks = identity.checks(mode, order, bounds)?;
    let mut outcome = Ok(());
    for check in &mut checks {
        tamper(check);
        if let Err(mismatch) = check.outcome() {
            outcome = Err(Witness {
                check: check.label.clone(),
                mismatch,
            });
            break;
        }
    }
    Ok(VerificationReport {
        identity,
        mode,
        order,
        checks: checks.len(),
        outcome,
        duration: start.elapsed(),
    })
}
