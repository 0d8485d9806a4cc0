//! JSON ideal files.
//!
//! ```json
//! {
//!   "ring": {"vars": ["x1", "x2", "x3"], "field": {"Fp": 32003}, "h": 2},
//!   "generators": ["x1*x3 + x2^2", "x1*x2"],
//!   "metadata": {"radical": false, "unmixed": false, "prime": false},
//!   "order": {"type": "omega_h"},
//!   "window": {"max_i": 2, "max_j": 6},
//!   "seed": 7
//! }
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldKind};
use crate::order::{monomials_up_to, omega_h_matrix, refine_to_weight, MatrixOrder, WeightOrder};
use crate::poly::{Poly, RingCtx};

/// Primes available at run time; each one is a separate instantiation.
pub const SUPPORTED_PRIMES: &[u32] = &[3, 5, 7, 101, 32003, 65521, 2147483647];

/// Runs `$body` with the type alias `$f` bound to the field named by
/// `$kind`. The body must evaluate to a [`Result`](crate::Result).
#[macro_export]
macro_rules! with_field {
    ($kind:expr, $f:ident => $body:expr) => {{
        match $kind {
            $crate::FieldKind::Rationals => {
                type $f = $crate::Rational;
                $body
            }
            $crate::FieldKind::Prime(3) => {
                type $f = $crate::Fp<3>;
                $body
            }
            $crate::FieldKind::Prime(5) => {
                type $f = $crate::Fp<5>;
                $body
            }
            $crate::FieldKind::Prime(7) => {
                type $f = $crate::Fp<7>;
                $body
            }
            $crate::FieldKind::Prime(101) => {
                type $f = $crate::Fp<101>;
                $body
            }
            $crate::FieldKind::Prime(32003) => {
                type $f = $crate::Fp<32003>;
                $body
            }
            $crate::FieldKind::Prime(65521) => {
                type $f = $crate::Fp<65521>;
                $body
            }
            $crate::FieldKind::Prime(2147483647) => {
                type $f = $crate::Fp<2147483647>;
                $body
            }
            $crate::FieldKind::Prime(p) => Err($crate::Error::Input(format!(
                "unsupported prime {p}; available primes: {:?}",
                $crate::ideal_file::SUPPORTED_PRIMES
            ))),
        }
    }};
}

/// `"order"` entry of an ideal file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum OrderSpec {
    Weight { omega: Vec<u64> },
    OmegaH,
    Matrix { rows: Vec<Vec<u64>> },
}

impl OrderSpec {
    /// A weight inducing this preorder on monomials of degree at most `cap`.
    /// Plain weights ignore the cap.
    pub fn to_weight(&self, n: usize, h: usize, cap: u32) -> Result<WeightOrder> {
        match self {
            OrderSpec::Weight { omega } => {
                if omega.len() != n {
                    return Err(Error::Context(format!(
                        "weight of length {} for {n} variables",
                        omega.len()
                    )));
                }
                Ok(WeightOrder::new(omega.clone()))
            }
            OrderSpec::OmegaH => refine_to_weight(&omega_h_matrix(n, h)?, &monomials_up_to(n, cap)),
            OrderSpec::Matrix { rows } => {
                let m = MatrixOrder::new(rows.clone())?;
                if m.nvars() != n {
                    return Err(Error::Context(format!(
                        "matrix with {} columns for {n} variables",
                        m.nvars()
                    )));
                }
                refine_to_weight(&m, &monomials_up_to(n, cap))
            }
        }
    }

    /// Whether [`OrderSpec::to_weight`] depends on the cap.
    pub fn needs_cap(&self) -> bool {
        !matches!(self, OrderSpec::Weight { .. })
    }
}

/// Declared properties. Nothing here except `nondegenerate` is checked.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Metadata {
    pub radical: bool,
    pub unmixed: bool,
    pub prime: bool,
    pub bigheight: Option<u32>,
    pub nondegenerate: Option<bool>,
    pub complete_intersection: bool,
}

impl Metadata {
    pub fn radical_unmixed(&self) -> bool {
        self.prime || (self.radical && self.unmixed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Window {
    pub max_i: u32,
    pub max_j: u32,
}

impl Default for Window {
    fn default() -> Self {
        Window { max_i: 2, max_j: 4 }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawField {
    Name(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u32,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRing {
    vars: Vec<String>,
    field: RawField,
    h: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIdealFile {
    #[serde(default)]
    name: Option<String>,
    ring: RawRing,
    generators: Vec<String>,
    #[serde(default)]
    metadata: Metadata,
    #[serde(default)]
    order: Option<OrderSpec>,
    #[serde(default)]
    window: Window,
    #[serde(default)]
    seed: Option<u64>,
}

/// A validated ideal file: the generator strings parse over the declared
/// field and are homogeneous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub name: Option<String>,
    pub ring: RingCtx,
    pub generators: Vec<String>,
    pub metadata: Metadata,
    pub order: Option<OrderSpec>,
    pub window: Window,
    pub seed: Option<u64>,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d: &u64| d * d <= u64::from(p)).all(|d| u64::from(p) % d != 0)
}

impl IdealFile {
    pub fn parse_str(src: &str) -> Result<Self> {
        let raw: RawIdealFile = serde_json::from_str(src).map_err(|e| {
            Error::Input(format!(
                "ideal file schema error at line {} column {}: {e}",
                e.line(),
                e.column()
            ))
        })?;
        let field = match raw.ring.field {
            RawField::Name(s) if s == "QQ" => FieldKind::Rationals,
            RawField::Name(s) => {
                return Err(Error::Input(format!("unknown field \"{s}\"; expected \"QQ\" or {{\"Fp\": p}}")))
            }
            RawField::Prime { fp } if is_prime(fp) && fp > 2 => FieldKind::Prime(fp),
            RawField::Prime { fp } => return Err(Error::Input(format!("{fp} is not an odd prime"))),
        };
        let ring = RingCtx::new(raw.ring.vars, raw.ring.h, field)?;
        let file = IdealFile {
            name: raw.name,
            ring,
            generators: raw.generators,
            metadata: raw.metadata,
            order: raw.order,
            window: raw.window,
            seed: raw.seed,
        };
        with_field!(field, K => file.polys::<K>().map(|_| ()))?;
        Ok(file)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let src = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        Self::parse_str(&src).map_err(|e| match e {
            Error::Input(m) => Error::Input(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn field(&self) -> FieldKind {
        self.ring.field
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    /// The generators over `F`; syntax errors name the generator and the
    /// column inside its string.
    pub fn polys<F: Field>(&self) -> Result<Vec<Poly<F>>> {
        self.generators
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let p = self.ring.parse::<F>(s).map_err(|e| match e {
                    Error::Syntax { offset, message } => Error::Syntax {
                        offset,
                        message: format!("generator {i}, column {}: {message}", offset + 1),
                    },
                    other => other,
                })?;
                if !p.is_homogeneous() {
                    return Err(Error::Input(format!("generator {i} is not homogeneous: {s}")));
                }
                Ok(p)
            })
            .collect()
    }

    /// The file's order (default `Omega_h`) as a weight valid through `cap`.
    pub fn weight(&self, cap: u32) -> Result<WeightOrder> {
        self.order
            .clone()
            .unwrap_or(OrderSpec::OmegaH)
            .to_weight(self.n(), self.ring.h, cap)
    }
}
