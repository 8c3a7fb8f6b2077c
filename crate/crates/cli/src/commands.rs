use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use nrr_core::graphs::graph_of_partition;
use nrr_core::hilbert::{hp_r, ladder_hilbert_series};
use nrr_core::partitions::{
    e_partitions, is_neighborly, neighborly_partitions, r_signed_count, r_partitions,
    rr_numerator, rr_product_side, rr_sum_side, t_partitions,
};
use nrr_core::signature::{signature_bruteforce, signature_fast, signed_neighborly_gf};
use nrr_core::verify::{run_with, Check};
use nrr_core::{Bounds, Mode, Order, Partition, SeriesQ, SignatureRoute, VerificationReport};

use crate::args::{Family, Format, PartitionsArgs, SeriesArgs, SignatureArgs, VerifyArgs, Which};
use crate::Failure;

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

#[derive(Serialize)]
struct FamilyListing {
    family: &'static str,
    count: usize,
    partitions: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    signed_count: Option<i64>,
}

#[derive(Serialize)]
struct PartitionsJson {
    n: usize,
    mode: u32,
    families: Vec<FamilyListing>,
}

pub fn partitions(a: &PartitionsArgs) -> Result<Output, Failure> {
    let families = match a.family {
        Family::All => vec![Family::Neighborly, Family::T, Family::E, Family::R],
        f => vec![f],
    };
    let mut listings = Vec::new();
    for f in families {
        let (name, list) = match f {
            Family::Neighborly => ("N", neighborly_partitions(a.n, a.mode)),
            Family::T => ("T", t_partitions(a.n, a.mode)),
            Family::E => ("E", e_partitions(a.n, a.mode)),
            _ => ("R", r_partitions(a.n, a.mode)),
        };
        let signed_count = match f {
            Family::R => Some(r_signed_count(a.n, a.mode)?),
            _ => None,
        };
        listings.push((name, list, signed_count));
    }

    let mut out = String::new();
    match a.format {
        Format::Text => {
            for (name, list, signed) in &listings {
                let _ = write!(out, "{name}_{}({}): {}", a.mode, a.n, list.len());
                if let Some(s) = signed {
                    let _ = write!(out, " (signed count {s})");
                }
                out.push('\n');
                for l in list {
                    let _ = writeln!(out, "  {l}");
                }
            }
        }
        Format::Csv => {
            out.push_str("family,partition,size\n");
            for (name, list, _) in &listings {
                for l in list {
                    let _ = writeln!(out, "{name},{l},{}", l.size());
                }
            }
        }
        Format::Json => {
            let json = PartitionsJson {
                n: a.n,
                mode: a.mode.index(),
                families: listings
                    .into_iter()
                    .map(|(family, list, signed_count)| FamilyListing {
                        family,
                        count: list.len(),
                        partitions: list.iter().map(|l| l.parts().to_vec()).collect(),
                        signed_count,
                    })
                    .collect(),
            };
            out = to_json(&json);
        }
    }
    Ok(Output::ok(out))
}

pub fn signature(a: &SignatureArgs, bounds: &Bounds) -> Result<Output, Failure> {
    let lambda: Partition = a.partition.parse()?;
    let g = graph_of_partition(&lambda)?;
    if !is_neighborly(&lambda, a.mode) {
        eprintln!("warning: {lambda} is not neighborly for i = {}", a.mode);
    }
    if g.has_isolated_vertex() {
        eprintln!("warning: G has an isolated vertex, so the signature is 0");
    }
    let slow = signature_bruteforce(&g, bounds)?;
    let fast = signature_fast(&g, bounds)?;
    if slow != fast {
        return Err(Failure {
            code: 1,
            message: format!("signature routes disagree on {lambda}: brute force {slow}, independence polynomial {fast}"),
        });
    }
    let vs: Vec<String> = g.vertices().iter().map(ToString::to_string).collect();
    let es: Vec<String> = g.edges().iter().map(ToString::to_string).collect();
    let mut out = String::new();
    let _ = writeln!(out, "partition: {lambda}");
    let _ = writeln!(out, "vertices: {}", vs.join(" "));
    let _ = writeln!(out, "edges: {}", es.join(" "));
    let _ = writeln!(out, "delta (brute force): {slow}");
    let _ = writeln!(out, "delta (independence polynomial): {fast}");
    let _ = writeln!(out, "delta: {slow}");
    Ok(Output::ok(out))
}

pub fn named_series(which: Which, mode: Mode, order: Order, bounds: &Bounds) -> nrr_core::Result<SeriesQ> {
    match which {
        Which::Numerator => rr_numerator(mode, order),
        Which::SignedGf => signed_neighborly_gf(mode, order, SignatureRoute::IndependencePolynomial, bounds),
        Which::RrSum => rr_sum_side(mode, order),
        Which::RrProduct => rr_product_side(mode, order),
        Which::HpR => hp_r(mode, order),
        Which::HilbertP => {
            let top = u32::try_from(order.value()).unwrap_or(u32::MAX);
            ladder_hilbert_series(mode, top, order)
        }
    }
}

#[derive(Serialize)]
struct SeriesJson<'a> {
    which: &'a str,
    mode: u32,
    order: usize,
    coefficients: &'a [i64],
}

pub fn series(a: &SeriesArgs, bounds: &Bounds) -> Result<Output, Failure> {
    let s = named_series(a.which, a.mode, Order::new(a.order), bounds)?;
    let mut out = String::new();
    match a.format {
        Format::Text => {
            let cs: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", cs.join(","));
        }
        Format::Csv => {
            out.push_str("order,coefficient\n");
            for (k, c) in s.coeffs().iter().enumerate() {
                let _ = writeln!(out, "{k},{c}");
            }
        }
        Format::Json => {
            let name = clap::ValueEnum::to_possible_value(&a.which).expect("no skipped values");
            out = to_json(&SeriesJson {
                which: name.get_name(),
                mode: a.mode.index(),
                order: a.order,
                coefficients: s.coeffs(),
            });
        }
    }
    Ok(Output::ok(out))
}

#[derive(Serialize)]
struct WitnessJson {
    check: String,
    order: usize,
    left: i64,
    right: i64,
}

#[derive(Serialize)]
struct ReportJson {
    identity: String,
    mode: u32,
    order: usize,
    checks: usize,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessJson>,
    duration_ms: u128,
}

pub fn verify(a: &VerifyArgs, bounds: &Bounds) -> Result<Output, Failure> {
    let order = Order::new(a.order);
    let jobs: Vec<_> = a
        .target
        .identities()
        .into_iter()
        .flat_map(|id| a.mode.modes().into_iter().map(move |m| (id, m)))
        .collect();
    let corrupt = a.corrupt_coefficient;
    let reports: Vec<VerificationReport> = jobs
        .par_iter()
        .map(|&(id, mode)| {
            run_with(id, mode, order, bounds, |c: &mut Check| {
                if let Some(k) = corrupt {
                    if k < c.left.order().len() {
                        c.left.add_to_coeff(k, 1).expect("corruption overflowed");
                    }
                }
            })
        })
        .collect::<nrr_core::Result<_>>()?;

    let all_passed = reports.iter().all(VerificationReport::passed);
    let mut out = String::new();
    match a.format {
        Format::Json => {
            let json: Vec<ReportJson> = reports
                .iter()
                .map(|r| ReportJson {
                    identity: r.identity.name().to_string(),
                    mode: r.mode.index(),
                    order: r.order.value(),
                    checks: r.checks,
                    passed: r.passed(),
                    witness: r.outcome.as_ref().err().map(|w| WitnessJson {
                        check: w.check.clone(),
                        order: w.mismatch.index,
                        left: w.mismatch.left,
                        right: w.mismatch.right,
                    }),
                    duration_ms: r.duration.as_millis(),
                })
                .collect();
            out = to_json(&json);
        }
        _ => {
            for r in &reports {
                let _ = write!(out, "{:<13} i={} orders 0..={}: ", r.identity.name(), r.mode, r.order.value());
                match &r.outcome {
                    Ok(()) => {
                        let noun = if r.checks == 1 { "check" } else { "checks" };
                        let _ = write!(out, "PASS ({} {noun})", r.checks);
                    }
                    Err(w) => {
                        let _ = write!(out, "FAIL {w}");
                    }
                }
                let _ = writeln!(out, " [{} ms]", r.duration.as_millis());
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let _ = writeln!(out, "{} of {} passed", reports.len() - failed, reports.len());
        }
    }
    Ok(Output {
        text: out,
        code: if all_passed { 0 } else { 1 },
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
