use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;
use std::sync::Arc;

/// Declared monotonicity order. Metadata only: verifiers never trust it,
/// every verdict comes from computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MonotoneOrder {
    Finite(u32),
    Infinite,
}

impl fmt::Display for MonotoneOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonotoneOrder::Finite(k) => write!(f, "{k}"),
            MonotoneOrder::Infinite => write!(f, "inf"),
        }
    }
}

/// Value of a scalar function at t = 0: a finite value, or only a limit
/// (treated as undefined unless the caller forces the zero convention).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ZeroValue {
    Value(f64),
    Limit,
}

type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A scalar function on (0, ∞) together with its derivative, its behavior at
/// zero, and the positivity/monotonicity metadata the verifiers consult.
#[derive(Clone)]
pub struct ScalarFunction {
    name: String,
    eval: ScalarFn,
    deriv: ScalarFn,
    at_zero: ZeroValue,
    strictly_positive: bool,
    nonvanishing: bool,
    vanishes_at_zero: bool,
    claimed_order: MonotoneOrder,
}

impl fmt::Debug for ScalarFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ScalarFunction")
            .field("name", &self.name)
            .field("at_zero", &self.at_zero)
            .field("claimed_order", &self.claimed_order)
            .finish()
    }
}

impl ScalarFunction {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// f(t). For t = 0 uses the declared zero value (NaN when only a limit
    /// exists); negative arguments yield NaN so domain errors surface.
    pub fn eval(&self, t: f64) -> f64 {
        if t > 0.0 {
            (self.eval)(t)
        } else if t == 0.0 {
            match self.at_zero {
                ZeroValue::Value(v) => v,
                ZeroValue::Limit => f64::NAN,
            }
        } else {
            f64::NAN
        }
    }

    /// f′(t) on (0, ∞).
    pub fn deriv(&self, t: f64) -> f64 {
        if t > 0.0 {
            (self.deriv)(t)
        } else {
            f64::NAN
        }
    }

    pub fn at_zero(&self) -> ZeroValue {
        self.at_zero
    }

    /// f((0, ∞)) ⊂ (0, ∞).
    pub fn strictly_positive_on_open(&self) -> bool {
        self.strictly_positive
    }

    /// 0 ∉ f((0, ∞)).
    pub fn nonvanishing_on_open(&self) -> bool {
        self.nonvanishing
    }

    /// f(0) = 0.
    pub fn vanishes_at_zero(&self) -> bool {
        self.vanishes_at_zero
    }

    pub fn claimed_order(&self) -> MonotoneOrder {
        self.claimed_order
    }
}

fn spec_err(spec: &str, reason: impl Into<String>) -> Error {
    Error::Spec {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

/// Look up a function by spec string.
///
/// Accepted specs: `power:s` (t^s, s ∈ (0,1]), `cubic`, `square`,
/// `mobius:c` (t/(t+c), c > 0), `logshift` (ln(1+t)), `identity`.
pub fn registry_get(spec: &str) -> Result<ScalarFunction> {
    let (head, param) = match spec.split_once(':') {
        Some((h, p)) => (h, Some(p)),
        None => (spec, None),
    };
    match (head, param) {
        ("power", Some(p)) => {
            let s: f64 = p
                .parse()
                .map_err(|_| spec_err(spec, "exponent must be a number"))?;
            if !(s > 0.0 && s <= 1.0) {
                return Err(spec_err(spec, "exponent must lie in (0, 1]"));
            }
            Ok(ScalarFunction {
                name: format!("power:{p}"),
                eval: Arc::new(move |t| t.powf(s)),
                deriv: Arc::new(move |t| s * t.powf(s - 1.0)),
                at_zero: ZeroValue::Value(0.0),
                strictly_positive: true,
                nonvanishing: true,
                vanishes_at_zero: true,
                claimed_order: MonotoneOrder::Infinite,
            })
        }
        ("mobius", Some(p)) => {
            let c: f64 = p
                .parse()
                .map_err(|_| spec_err(spec, "shift must be a number"))?;
            if !(c > 0.0 && c.is_finite()) {
                return Err(spec_err(spec, "shift must be positive"));
            }
            Ok(ScalarFunction {
                name: format!("mobius:{p}"),
                eval: Arc::new(move |t| t / (t + c)),
                deriv: Arc::new(move |t| c / ((t + c) * (t + c))),
                at_zero: ZeroValue::Value(0.0),
                strictly_positive: true,
                nonvanishing: true,
                vanishes_at_zero: true,
                claimed_order: MonotoneOrder::Infinite,
            })
        }
        ("cubic", None) => Ok(ScalarFunction {
            name: "cubic".to_string(),
            eval: Arc::new(|t| t * t * t),
            deriv: Arc::new(|t| 3.0 * t * t),
            at_zero: ZeroValue::Value(0.0),
            strictly_positive: true,
            nonvanishing: true,
            vanishes_at_zero: true,
            claimed_order: MonotoneOrder::Finite(1),
        }),
        ("square", None) => Ok(ScalarFunction {
            name: "square".to_string(),
            eval: Arc::new(|t| t * t),
            deriv: Arc::new(|t| 2.0 * t),
            at_zero: ZeroValue::Value(0.0),
            strictly_positive: true,
            nonvanishing: true,
            vanishes_at_zero: true,
            claimed_order: MonotoneOrder::Finite(1),
        }),
        ("logshift", None) => Ok(ScalarFunction {
            name: "logshift".to_string(),
            eval: Arc::new(|t| t.ln_1p()),
            deriv: Arc::new(|t| 1.0 / (1.0 + t)),
            at_zero: ZeroValue::Value(0.0),
            strictly_positive: true,
            nonvanishing: true,
            vanishes_at_zero: true,
            claimed_order: MonotoneOrder::Infinite,
        }),
        ("identity", None) => Ok(ScalarFunction {
            name: "identity".to_string(),
            eval: Arc::new(|t| t),
            deriv: Arc::new(|_| 1.0),
            at_zero: ZeroValue::Value(0.0),
            strictly_positive: true,
            nonvanishing: true,
            vanishes_at_zero: true,
            claimed_order: MonotoneOrder::Infinite,
        }),
        _ => Err(spec_err(spec, "unknown function")),
    }
}

/// t ↦ −1/f(t). Requires f nonvanishing on (0, ∞); monotonicity order is
/// inherited in both directions.
pub fn transform_neg_inv(f: &ScalarFunction) -> Result<ScalarFunction> {
    if !f.nonvanishing {
        return Err(Error::Precondition(format!(
            "`{}` may vanish on (0, inf); -1/f is undefined there",
            f.name
        )));
    }
    let eval_f = f.eval.clone();
    let eval_f2 = f.eval.clone();
    let deriv_f = f.deriv.clone();
    let at_zero = match f.at_zero {
        ZeroValue::Value(v) if v != 0.0 => ZeroValue::Value(-1.0 / v),
        _ => ZeroValue::Limit,
    };
    Ok(ScalarFunction {
        name: format!("neg_inv({})", f.name),
        eval: Arc::new(move |t| -1.0 / eval_f(t)),
        deriv: Arc::new(move |t| {
            let v = eval_f2(t);
            deriv_f(t) / (v * v)
        }),
        at_zero,
        strictly_positive: false,
        nonvanishing: true,
        vanishes_at_zero: false,
        claimed_order: f.claimed_order,
    })
}

/// t ↦ t/f(t) on (0, ∞) with the value 0 at t = 0. Requires f strictly
/// positive on (0, ∞). A 2n-monotone f is claimed to yield an n-monotone
/// quotient, so finite claimed orders halve.
pub fn transform_quotient(f: &ScalarFunction) -> Result<ScalarFunction> {
    if !f.strictly_positive {
        return Err(Error::Precondition(format!(
            "`{}` is not strictly positive on (0, inf)",
            f.name
        )));
    }
    let eval_f = f.eval.clone();
    let eval_f2 = f.eval.clone();
    let deriv_f = f.deriv.clone();
    let claimed_order = match f.claimed_order {
        MonotoneOrder::Finite(k) => MonotoneOrder::Finite(k / 2),
        MonotoneOrder::Infinite => MonotoneOrder::Infinite,
    };
    Ok(ScalarFunction {
        name: format!("quotient({})", f.name),
        eval: Arc::new(move |t| t / eval_f(t)),
        deriv: Arc::new(move |t| {
            let v = eval_f2(t);
            (v - t * deriv_f(t)) / (v * v)
        }),
        at_zero: ZeroValue::Value(0.0),
        strictly_positive: true,
        nonvanishing: true,
        vanishes_at_zero: true,
        claimed_order,
    })
}

/// The thirteen strictly positive registry functions swept by the
/// verification pipelines: nine powers, three Möbius shifts, and logshift.
pub fn standard_positive_specs() -> Vec<String> {
    let mut specs: Vec<String> = (1..=9).map(|k| format!("power:0.{k}")).collect();
    specs.extend(["mobius:0.5", "mobius:1", "mobius:2", "logshift"].map(String::from));
    specs
}
