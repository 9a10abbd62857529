//! Weak index, IT/WIT classification, and the continuous regularity search.
//!
//! Write `q_γ` for the pencil polynomial of `γ`. The class `(m - i)·id + γ`
//! has pencil polynomial `q_γ(N + m - i)`, so every predicate evaluation is
//! a Sturm count on a shift of one polynomial.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::sturm::integer_root_radius;
use crate::exactmath::{int, sturm_root_profile, Rational, RootProfile};
use crate::riemannroch::{pnrd_pencil, BundleClass};
use crate::wedderburn::{SymmetricClass, VarietyContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    /// Nondegenerate: cohomology concentrated in the index.
    It(usize),
    /// Degenerate: the value reported is `i + dim K`.
    WitGeneric(usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::It(i) => write!(f, "IT({i})"),
            Label::WitGeneric(j) => write!(f, "WIT({j})-generic"),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub chi: Rational,
    pub index_i: usize,
    pub dim_k: usize,
    pub weak_index_j: usize,
    pub label: Label,
    /// Degenerate classes only: numerical data cannot exclude the branch
    /// where every cohomology group of a particular translate vanishes.
    pub all_vanishing_possible: bool,
    pub gv_note: Option<String>,
}

pub fn weak_index(ctx: &VarietyContext, alpha: &SymmetricClass) -> Result<usize> {
    let profile = pnrd_pencil(ctx, alpha)?.profile;
    Ok(profile.positive + profile.zero)
}

pub fn classify(ctx: &VarietyContext, alpha: &SymmetricClass) -> Result<Classification> {
    let data = pnrd_pencil(ctx, alpha)?;
    let chi = ctx.sqrt_deg_phi() * data.q.coeff(0);
    let (index_i, dim_k) = (data.profile.positive, data.profile.zero);
    let weak_index_j = index_i + dim_k;
    let degenerate = chi.is_zero();
    let label = if degenerate {
        Label::WitGeneric(weak_index_j)
    } else {
        Label::It(index_i)
    };
    let gv_note = (index_i == 0).then(|| {
        if degenerate {
            "index 0 but degenerate: generic vanishing is not decided numerically".to_string()
        } else {
            "IT(0): cohomology vanishes in positive degrees, so the class is generic vanishing".to_string()
        }
    });
    debug_assert_eq!(weak_index_j, data.profile.positive + data.profile.zero);
    Ok(Classification {
        chi,
        index_i,
        dim_k,
        weak_index_j,
        label,
        all_vanishing_possible: degenerate,
        gv_note,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateEntry {
    pub i: usize,
    pub degenerate: bool,
    pub positive_roots: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateRow {
    pub m: i64,
    pub entries: Vec<PredicateEntry>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityResult {
    pub m: i64,
    pub g: usize,
    /// Every scanned `m' <= m`, in increasing order.
    pub predicate_table: Vec<PredicateRow>,
    pub scan_window: (i64, i64),
    pub gv_note: Option<String>,
}

/// Pencil profiles of the shifted classes `s·id + γ`, memoized by `s`.
struct ShiftedProfiles<'a> {
    q: &'a crate::exactmath::RationalPolynomial,
    cache: BTreeMap<i64, RootProfile>,
}

impl ShiftedProfiles<'_> {
    fn get(&mut self, s: i64) -> Result<&RootProfile> {
        if !self.cache.contains_key(&s) {
            let profile = sturm_root_profile(&self.q.shift(&int(s)))?;
            self.cache.insert(s, profile);
        }
        Ok(&self.cache[&s])
    }
}

/// Lower and upper ends of the scan for a pencil polynomial of degree `g`
/// whose real roots lie in `(-K, K)`: at `g - K - 1` the class
/// `(m - g)·id + γ` has all roots positive, so the predicate fails at
/// `i = g`; at `g + K + 1` every `(m - i)·id + γ` with `i <= g` has only
/// negative roots, so the predicate holds.
pub fn scan_window(q: &crate::exactmath::RationalPolynomial) -> Result<(i64, i64)> {
    let g = q.degree().unwrap_or(0) as i64;
    let k = integer_root_radius(q);
    let k = k.to_i64().filter(|k| *k < i64::MAX / 4).ok_or(Error::ScanWindowExhausted {
        lo: i64::MIN,
        hi: i64::MAX,
    })?;
    Ok((g - k - 1, g + k + 1))
}

fn predicate_row(profiles: &mut ShiftedProfiles<'_>, g: usize, m: i64) -> Result<PredicateRow> {
    let mut entries = Vec::with_capacity(g);
    for i in 1..=g {
        let p = profiles.get(m - i as i64)?;
        let degenerate = p.zero > 0;
        let holds = degenerate || p.positive != i;
        entries.push(PredicateEntry {
            i,
            degenerate,
            positive_roots: p.positive,
            holds,
        });
    }
    let holds = entries.iter().all(|e| e.holds);
    Ok(PredicateRow { m, entries, holds })
}

pub fn reg_cont(ctx: &VarietyContext, gamma: &SymmetricClass) -> Result<RegularityResult> {
    let q = pnrd_pencil(ctx, gamma)?.q;
    let g = ctx.dimension() as usize;
    let (lo, hi) = scan_window(&q)?;
    let mut profiles = ShiftedProfiles {
        q: &q,
        cache: BTreeMap::new(),
    };
    let mut table = Vec::new();
    for m in lo..=hi {
        let row = predicate_row(&mut profiles, g, m)?;
        let holds = row.holds;
        table.push(row);
        if holds {
            return Ok(RegularityResult {
                m,
                g,
                predicate_table: table,
                scan_window: (lo, hi),
                gv_note: proportional_note(ctx, gamma),
            });
        }
    }
    Err(Error::ScanWindowExhausted { lo, hi })
}

/// The GV reading of the answer applies only when `γ` is a rational
/// multiple of the polarization class.
fn proportional_note(ctx: &VarietyContext, gamma: &SymmetricClass) -> Option<String> {
    let c = gamma.blocks().first()?.entry(0, 0).coords()[0].as_rational()?;
    (ctx.scalar_class(&c) == *gamma).then(|| {
        "gamma is a rational multiple of the polarization: m is the least integer with the twist by (m - g) generic vanishing"
            .to_string()
    })
}

/// Depends on the bundle only through `γ = det / rank`.
pub fn reg_cont_bundle(ctx: &VarietyContext, b: &BundleClass) -> Result<RegularityResult> {
    reg_cont(ctx, b.gamma())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepPoint {
    pub s: Rational,
    pub result: std::result::Result<i64, Error>,
}

/// A maximal run of consecutive grid points with the same outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSegment {
    pub from: Rational,
    pub to: Rational,
    pub points: usize,
    pub m: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepTable {
    pub points: Vec<SweepPoint>,
    pub segments: Vec<SweepSegment>,
}

/// `reg_cont(γ₀ + s·δ)` along the grid; a failing point is recorded in
/// place and does not stop the sweep.
pub fn sweep(ctx: &VarietyContext, gamma0: &SymmetricClass, delta: &SymmetricClass, grid: &[Rational]) -> SweepTable {
    let points: Vec<SweepPoint> = grid
        .iter()
        .map(|s| {
            let result = ctx
                .scale(delta, s)
                .and_then(|sd| ctx.add(gamma0, &sd))
                .and_then(|c| reg_cont(ctx, &c))
                .map(|r| r.m);
            SweepPoint { s: s.clone(), result }
        })
        .collect();
    let mut segments: Vec<SweepSegment> = Vec::new();
    for p in &points {
        let m = p.result.as_ref().ok().copied();
        match segments.last_mut() {
            Some(seg) if seg.m == m && m.is_some() => {
                seg.to = p.s.clone();
                seg.points += 1;
            }
            _ => segments.push(SweepSegment {
                from: p.s.clone(),
                to: p.s.clone(),
                points: 1,
                m,
            }),
        }
    }
    SweepTable { points, segments }
}
