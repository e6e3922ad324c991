//! Plain-text rendering of reports.

use std::fmt::Write;

use num_traits::{One, Signed, Zero};

use npspread_core::spread::{BasicReport, BoundReport, FamilyReport, ReductionReport, SpreadReport};
use npspread_core::{Constraint, HRep, Polyhedron, QVector, Ring, VRep};

use crate::{MinredResult, NpResult};

/// `c1*x + c2*y - ...` over the ring's variable names.
pub(crate) fn linear(ring: &Ring, normal: &QVector) -> String {
    let mut out = String::new();
    for (c, name) in normal.iter().zip(ring.variables()) {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if magnitude.is_one() {
            out.push_str(name);
        } else {
            let _ = write!(out, "{magnitude}*{name}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn le(ring: &Ring, c: &Constraint) -> String {
    format!("{} <= {}", linear(ring, &c.normal), c.rhs)
}

fn ge(ring: &Ring, c: &Constraint) -> String {
    format!("{} >= {}", linear(ring, &c.normal.neg()), -c.rhs.clone())
}

fn eq(ring: &Ring, c: &Constraint) -> String {
    format!("{} = {}", linear(ring, &c.normal), c.rhs)
}

fn section(out: &mut String, title: &str, lines: impl IntoIterator<Item = String>) {
    let _ = writeln!(out, "{title}:");
    let mut any = false;
    for l in lines {
        let _ = writeln!(out, "  {l}");
        any = true;
    }
    if !any {
        let _ = writeln!(out, "  (none)");
    }
}

fn points(v: &[QVector]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn vrep(out: &mut String, label: &str, v: &VRep) {
    section(out, &format!("{label} vertices"), points(&v.vertices));
    if !v.rays.is_empty() {
        section(out, &format!("{label} rays"), points(&v.rays));
    }
}

pub(crate) fn np(ring: &Ring, r: &NpResult) -> String {
    let mut out = String::new();
    let big: &HRep = &r.polyhedron.hrep;
    section(
        &mut out,
        "NP(I) halfspaces",
        big.equalities
            .iter()
            .map(|c| eq(ring, c))
            .chain(big.inequalities.iter().map(|c| ge(ring, c))),
    );
    vrep(&mut out, "NP(I)", &r.polyhedron.vrep);
    let small = &r.polytope.hrep;
    section(&mut out, "np(I) hyperplanes", small.equalities.iter().map(|c| eq(ring, c)));
    section(&mut out, "np(I) facets", small.inequalities.iter().map(|c| le(ring, c)));
    vrep(&mut out, "np(I)", &r.polytope.vrep);
    out
}

pub(crate) fn spread(ring: &Ring, np: &Polyhedron, r: &SpreadReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "spread = {}", r.spread);
    let _ = writeln!(out, "mu = {}", r.mu);
    let _ = writeln!(out, "bound = {}", r.bound);
    let _ = writeln!(out, "s = {}", r.s);
    let _ = writeln!(out, "k = {}", optional(r.k));
    let _ = writeln!(out, "gap = {}", r.gap);
    let face: Vec<String> = r
        .witness_face
        .vertices(&np.vrep)
        .into_iter()
        .map(ToString::to_string)
        .collect();
    let _ = writeln!(out, "witness face (dimension {}): {}", r.witness_face.dim, face.join(" "));
    let _ = writeln!(
        out,
        "witness functional: {}",
        linear(ring, &r.witness_functional)
    );
    out
}

fn optional(k: Option<usize>) -> String {
    k.map_or_else(|| "none".to_string(), |k| k.to_string())
}

pub(crate) fn bound(ring: &Ring, r: &BoundReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "s = {}", r.s);
    let _ = writeln!(out, "k = {}", optional(r.k));
    match &r.certificate {
        None => {
            let _ = writeln!(out, "bound = {} (no certificate)", r.bound);
        }
        Some(c) => {
            let _ = writeln!(out, "bound = {}", r.bound);
            let terms = c
                .alphas
                .iter()
                .zip(&r.np.equalities)
                .filter(|(a, _)| !a.is_zero())
                .map(|(a, h)| format!("{} * ({})", a, eq(ring, h)))
                .chain(
                    c.beta_support
                        .iter()
                        .map(|&j| format!("{} * ({})", c.betas[j], le(ring, &r.np.inequalities[j]))),
                );
            section(&mut out, "certificate", terms);
            let _ = writeln!(out, "  combination = {}", c.combination);
        }
    }
    out
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

pub(crate) fn basic(r: &BasicReport) -> String {
    let mut out = String::new();
    let c = &r.conditions;
    let _ = writeln!(out, "basic = {}", yes(r.basic));
    let _ = writeln!(out, "mu = {}", r.mu);
    let _ = writeln!(out, "spread = {}", r.spread);
    let _ = writeln!(out, "mu <= n: {}", yes(c.mu_at_most_n));
    let _ = writeln!(out, "hyperplanes = n - mu + 1: {}", yes(c.hyperplane_count));
    let _ = writeln!(out, "positive entry in every reduced column: {}", yes(c.positive_in_every_column));
    let _ = writeln!(out, "negative combination of hyperplanes: {}", yes(c.negative_combination));
    let _ = writeln!(out, "column sign verdict: {}", yes(r.column_sign_verdict));
    let _ = writeln!(
        out,
        "single hyperplane sign: {}",
        r.single_hyperplane_sign.map_or("n/a", yes)
    );
    section(&mut out, "reduced hyperplanes", points(r.rref_matrix.rows()));
    out
}

pub(crate) fn reduce(max_power: u64, r: &ReductionReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "reduction = {}", yes(r.is_reduction));
    let method = match r.method {
        npspread_core::spread::ReductionMethod::NpEquality => "np-equality",
        npspread_core::spread::ReductionMethod::PowerWitness => "power-witness",
    };
    let _ = writeln!(out, "method = {method}");
    match r.witness_power {
        Some(n) => {
            let _ = writeln!(out, "witness power = {n}");
        }
        None => {
            let _ = writeln!(out, "witness power = none up to {max_power}");
        }
    }
    out
}

pub(crate) fn minred(r: &MinredResult) -> String {
    format!("minimal reduction = ({})\ngenerators = {}\n", r.ideal, r.generators.len())
}

pub(crate) fn family(r: &FamilyReport) -> String {
    let computed = r.computed.map_or_else(|| "skipped".to_string(), |c| c.to_string());
    format!("spread = {}\ncomputed = {computed}\n", r.spread)
}
