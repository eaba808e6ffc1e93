//! Closed-form strong-metric-dimension formulas for lexicographic
//! products, and a router that evaluates every applicable formula and
//! cross-checks the results against the generic pipeline and, optionally,
//! brute force.
//!
//! Case labels follow a fixed catalogue: T5 covers twin-free first
//! factors, T7 a complete second factor, T9 a complete first factor, T11
//! and T13 bounded-degree second factors, with C10 and C12 the edgeless
//! specializations. When no closed form applies the router still returns
//! the pipeline value under the PIPELINE_ONLY case.

use crate::boundary::{strong_resolving_graph, strong_resolving_tf_graph};
use crate::cover::{clique_number, vertex_cover};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::products::{join, lexicographic_product};
use crate::smd::{smd_bruteforce_with_limit, smd_via_sr, BRUTE_FORCE_LIMIT};
use crate::star_transform;
use serde::Serialize;
use std::fmt;

/// Which closed-form case produced a report's value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CaseId {
    #[serde(rename = "T5.i")]
    T5i,
    #[serde(rename = "T5.ii")]
    T5ii,
    #[serde(rename = "T7")]
    T7,
    #[serde(rename = "T9.i")]
    T9i,
    #[serde(rename = "T9.ii")]
    T9ii,
    #[serde(rename = "C10")]
    C10,
    #[serde(rename = "T11.i")]
    T11i,
    #[serde(rename = "T11.ii")]
    T11ii,
    #[serde(rename = "C12")]
    C12,
    #[serde(rename = "T13.i")]
    T13i,
    #[serde(rename = "T13.ii")]
    T13ii,
    #[serde(rename = "PIPELINE_ONLY")]
    PipelineOnly,
}

impl CaseId {
    pub fn label(self) -> &'static str {
        match self {
            CaseId::T5i => "T5.i",
            CaseId::T5ii => "T5.ii",
            CaseId::T7 => "T7",
            CaseId::T9i => "T9.i",
            CaseId::T9ii => "T9.ii",
            CaseId::C10 => "C10",
            CaseId::T11i => "T11.i",
            CaseId::T11ii => "T11.ii",
            CaseId::C12 => "C12",
            CaseId::T13i => "T13.i",
            CaseId::T13ii => "T13.ii",
            CaseId::PipelineOnly => "PIPELINE_ONLY",
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A named hypothesis and whether it held on the given input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Precondition {
    pub name: &'static str,
    pub holds: bool,
}

fn pre(name: &'static str, holds: bool) -> Precondition {
    Precondition { name, holds }
}

/// Outcome of evaluating the closed forms on a product `G o H`.
///
/// Whenever two of `value`, `pipeline_value` and `bruteforce_value` are
/// present they are equal; disagreement is surfaced as
/// [`Error::Discrepancy`] instead of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub case: CaseId,
    pub preconditions: Vec<Precondition>,
    /// The selected case's value; for PIPELINE_ONLY this is the pipeline value.
    pub value: usize,
    /// Cover number of the strong resolving graph of the explicit product.
    pub pipeline_value: Option<usize>,
    pub bruteforce_value: Option<usize>,
    /// Every closed form whose hypotheses held, with its value.
    pub applied: Vec<(CaseId, usize)>,
}

/// How much independent verification the router performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum VerifyLevel {
    FormulaOnly,
    Pipeline,
    Bruteforce,
}

/// Size limits for the verification legs.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Largest product order brute force will accept.
    pub brute_max: usize,
    /// Largest product order the cover pipeline will accept.
    pub pipeline_max: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            brute_max: BRUTE_FORCE_LIMIT,
            pipeline_max: 200,
        }
    }
}

fn require(cond: bool, msg: &'static str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(msg.into()))
    }
}

fn require_factors(g: &Graph, h_order: usize) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Disconnected {
            what: "product formulas",
        });
    }
    require(g.order() >= 2, "first factor must have order >= 2")?;
    require(h_order >= 2, "second factor must have order >= 2")
}

fn dim_of(g: &Graph) -> usize {
    smd_via_sr(g).expect("connected by construction")
}

fn dim_of_cone(h: &Graph) -> usize {
    // The join with a single vertex is always connected.
    dim_of(&join(&Graph::complete(1), h))
}

fn alpha_srs(g: &Graph) -> Result<usize> {
    let (srs, _) = strong_resolving_tf_graph(g)?;
    Ok(vertex_cover(&srs).size)
}

/// Closed form for a twin-free connected first factor: splits on whether
/// the second factor has diameter at most two.
pub fn formula_no_true_twins(g: &Graph, h: &Graph) -> Result<TheoremReport> {
    let (n, np) = (g.order(), h.order());
    require_factors(g, np)?;
    let twin_free = !g.has_true_twins();
    require(twin_free, "first factor has true twin vertices")?;
    let diam_h = h.distances().diameter();
    let small_diam = diam_h <= 2;

    let dim_g = dim_of(g);
    let (case, value) = if small_diam {
        let dim_h = dim_of(h);
        (CaseId::T5i, n * dim_h + np * dim_g - dim_g * dim_h)
    } else {
        let dim_k1h = dim_of_cone(h);
        (CaseId::T5ii, n * dim_k1h + np * dim_g - dim_g * dim_k1h)
    };
    Ok(TheoremReport {
        case,
        preconditions: vec![
            pre("first factor connected", true),
            pre("first factor order >= 2", true),
            pre("second factor order >= 2", true),
            pre("first factor twin-free", twin_free),
            pre("second factor diameter <= 2", small_diam),
        ],
        value,
        pipeline_value: None,
        bruteforce_value: None,
        applied: vec![(case, value)],
    })
}

/// Closed form for a complete second factor of the given order.
pub fn formula_second_complete(g: &Graph, nprime: usize) -> Result<TheoremReport> {
    let n = g.order();
    require_factors(g, nprime)?;
    let value = n * (nprime - 1) + dim_of(g);
    Ok(TheoremReport {
        case: CaseId::T7,
        preconditions: vec![
            pre("first factor connected", true),
            pre("first factor order >= 2", true),
            pre("second factor order >= 2", true),
            pre("second factor complete", true),
        ],
        value,
        pipeline_value: None,
        bruteforce_value: None,
        applied: vec![(CaseId::T7, value)],
    })
}

/// Closed form for a complete first factor of order `n` and a second
/// factor with maximum degree at most its order minus two.
pub fn formula_first_complete(n: usize, h: &Graph) -> Result<TheoremReport> {
    let np = h.order();
    require(n >= 2, "first factor must have order >= 2")?;
    require(np >= 2, "second factor must have order >= 2")?;
    let bounded = h.max_degree() + 2 <= np;
    require(bounded, "second factor has a vertex of full degree")?;
    let diam_h = h.distances().diameter();

    // Full degree is excluded, so the diameter is exactly 2 or above 2.
    let (mut case, value) = if diam_h == 2 {
        (CaseId::T9i, n * dim_of(h))
    } else {
        (CaseId::T9ii, n * dim_of_cone(h))
    };
    if h.is_edgeless() {
        debug_assert_eq!(value, n * (np - 1));
        case = CaseId::C10;
    }
    Ok(TheoremReport {
        case,
        preconditions: vec![
            pre("first factor order >= 2", true),
            pre("second factor order >= 2", true),
            pre("second factor max degree <= order-2", bounded),
            pre("second factor diameter = 2", diam_h == 2),
            pre("second factor edgeless", h.is_edgeless()),
        ],
        value,
        pipeline_value: None,
        bruteforce_value: None,
        applied: vec![(case, value)],
    })
}

/// Closed form for a connected non-complete first factor and a second
/// factor with maximum degree at most its order minus two; uses the
/// cover number of the twin-filtered strong resolving graph.
pub fn formula_bounded_degree(g: &Graph, h: &Graph) -> Result<TheoremReport> {
    let (n, np) = (g.order(), h.order());
    require_factors(g, np)?;
    require(!g.is_complete(), "first factor is complete")?;
    let bounded = h.max_degree() + 2 <= np;
    require(bounded, "second factor has a vertex of full degree")?;
    let diam_h = h.distances().diameter();
    let a = alpha_srs(g)?;

    let (mut case, value) = if diam_h == 2 {
        let dim_h = dim_of(h);
        (CaseId::T11i, n * dim_h + np * a - a * dim_h)
    } else {
        let dim_k1h = dim_of_cone(h);
        (CaseId::T11ii, n * dim_k1h + np * a - a * dim_k1h)
    };
    if h.is_edgeless() {
        debug_assert_eq!(value, n * (np - 1) + a);
        case = CaseId::C12;
    }
    Ok(TheoremReport {
        case,
        preconditions: vec![
            pre("first factor connected", true),
            pre("first factor order >= 2", true),
            pre("second factor order >= 2", true),
            pre("first factor non-complete", true),
            pre("second factor max degree <= order-2", bounded),
            pre("second factor diameter = 2", diam_h == 2),
            pre("second factor edgeless", h.is_edgeless()),
        ],
        value,
        pipeline_value: None,
        bruteforce_value: None,
        applied: vec![(case, value)],
    })
}

/// Closed form for a twin-free bounded-degree second factor, expressed
/// through its clique number; tightens to the twin-free-first-factor
/// variant when the first factor has no twins either.
pub fn formula_twin_free_h(g: &Graph, h: &Graph) -> Result<TheoremReport> {
    let (n, np) = (g.order(), h.order());
    require_factors(g, np)?;
    require(!g.is_complete(), "first factor is complete")?;
    let bounded = h.max_degree() + 2 <= np;
    require(bounded, "second factor has a vertex of full degree")?;
    let h_twin_free = !h.has_true_twins();
    require(h_twin_free, "second factor has true twin vertices")?;

    let omega = clique_number(h);
    let a = alpha_srs(g)?;
    let base = (n - a) * (np - omega) + np * a;

    let g_twin_free = !g.has_true_twins();
    let (case, value) = if g_twin_free {
        let dim_g = dim_of(g);
        let refined = (n - dim_g) * (np - omega) + np * dim_g;
        debug_assert_eq!(refined, base);
        (CaseId::T13ii, refined)
    } else {
        (CaseId::T13i, base)
    };
    Ok(TheoremReport {
        case,
        preconditions: vec![
            pre("first factor connected", true),
            pre("first factor order >= 2", true),
            pre("second factor order >= 2", true),
            pre("first factor non-complete", true),
            pre("second factor max degree <= order-2", bounded),
            pre("second factor twin-free", h_twin_free),
            pre("first factor twin-free", g_twin_free),
        ],
        value,
        pipeline_value: None,
        bruteforce_value: None,
        applied: vec![(case, value)],
    })
}

/// The cover-algebra identity for twin-free first factors, computed from
/// boundary sizes and cover numbers of the auxiliary graphs:
/// `|B|*a(H*) + n'*a(G_SR) - a(G_SR)*a(H*) + (n - |B|)*a(H*_-)` where `B`
/// is the boundary of `g`. Serves as an extra verification leg.
pub fn boundary_cover_identity(g: &Graph, h: &Graph) -> Result<usize> {
    let (n, np) = (g.order(), h.order());
    require_factors(g, np)?;
    require(!g.has_true_twins(), "first factor has true twin vertices")?;
    let (sr, _) = strong_resolving_graph(g);
    let boundary_size = sr.order();
    let alpha_sr = vertex_cover(&sr).size;
    let hstar = star_transform(h);
    let alpha_hstar = vertex_cover(&hstar).size;
    let (hstar_minus, _) = hstar.remove_isolated();
    let alpha_hstar_minus = vertex_cover(&hstar_minus).size;
    Ok(boundary_size * alpha_hstar + np * alpha_sr - alpha_sr * alpha_hstar
        + (n - boundary_size) * alpha_hstar_minus)
}

/// Evaluates every closed form whose hypotheses hold on `(g, h)`, checks
/// the results against each other and per `level` against the pipeline
/// and brute force, and returns the consolidated report; disagreement is
/// an [`Error::Discrepancy`]. With no applicable closed form the case is
/// PIPELINE_ONLY and the pipeline value is computed regardless of level.
pub fn route_and_evaluate(g: &Graph, h: &Graph, level: VerifyLevel) -> Result<TheoremReport> {
    route_and_evaluate_with(g, h, level, &Limits::default())
}

pub fn route_and_evaluate_with(
    g: &Graph,
    h: &Graph,
    level: VerifyLevel,
    limits: &Limits,
) -> Result<TheoremReport> {
    let (n, np) = (g.order(), h.order());
    require_factors(g, np)?;

    let g_twin_free = !g.has_true_twins();
    let g_complete = g.is_complete();
    let h_complete = h.is_complete();
    let h_edgeless = h.is_edgeless();
    let h_twin_free = !h.has_true_twins();
    let bounded = h.max_degree() + 2 <= np;
    let diam_h = h.distances().diameter();

    let preconditions = vec![
        pre("first factor connected", true),
        pre("first factor order >= 2", true),
        pre("second factor order >= 2", true),
        pre("first factor twin-free", g_twin_free),
        pre("first factor complete", g_complete),
        pre("second factor complete", h_complete),
        pre("second factor edgeless", h_edgeless),
        pre("second factor twin-free", h_twin_free),
        pre("second factor max degree <= order-2", bounded),
        pre("second factor diameter <= 2", diam_h <= 2),
    ];

    let mut applied: Vec<(CaseId, usize)> = Vec::new();
    if g_twin_free {
        applied.extend(formula_no_true_twins(g, h)?.applied);
    }
    if h_complete {
        applied.extend(formula_second_complete(g, np)?.applied);
    }
    if g_complete && bounded {
        applied.extend(formula_first_complete(n, h)?.applied);
    }
    if !g_complete && bounded {
        applied.extend(formula_bounded_degree(g, h)?.applied);
    }
    if !g_complete && bounded && h_twin_free {
        applied.extend(formula_twin_free_h(g, h)?.applied);
    }

    let mut legs: Vec<(String, usize)> = applied
        .iter()
        .map(|&(case, value)| (case.label().to_string(), value))
        .collect();
    if g_twin_free {
        legs.push(("cover-identity".into(), boundary_cover_identity(g, h)?));
    }

    let product = lexicographic_product(g, h)?;
    let pipeline_value = if applied.is_empty() || level >= VerifyLevel::Pipeline {
        if product.order() > limits.pipeline_max {
            return Err(Error::TooLarge {
                what: "pipeline verification of the product",
                order: product.order(),
                limit: limits.pipeline_max,
            });
        }
        let v = smd_via_sr(&product)?;
        legs.push(("pipeline".into(), v));
        Some(v)
    } else {
        None
    };
    let bruteforce_value = if level >= VerifyLevel::Bruteforce {
        let (v, _) = smd_bruteforce_with_limit(&product, limits.brute_max)?;
        legs.push(("bruteforce".into(), v));
        Some(v)
    } else {
        None
    };

    let reference = legs.first().expect("at least one leg").1;
    if legs.iter().any(|&(_, v)| v != reference) {
        let detail = legs
            .iter()
            .map(|(name, v)| format!("{name}={v}"))
            .collect::<Vec<_>>()
            .join(", ");
        return Err(Error::Discrepancy(format!(
            "strong metric dimension legs disagree: {detail}"
        )));
    }

    let (case, value) = applied
        .first()
        .copied()
        .unwrap_or((CaseId::PipelineOnly, reference));
    Ok(TheoremReport {
        case,
        preconditions,
        value,
        pipeline_value,
        bruteforce_value,
        applied,
    })
}
