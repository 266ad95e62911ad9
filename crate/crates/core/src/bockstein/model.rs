use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::ensure_prime;

/// The two model differential algebras over `F_p`.
///
/// `Type1` is `P{y} (x) E{x}` with `d^1 y = x`, `deg x = deg y - 1`.
/// `Type2` is `E{z} (x) P{y}` with `d^1 z = y`, `deg z = deg y + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    Type1,
    Type2,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelKind::Type1 => "TYPE1",
            ModelKind::Type2 => "TYPE2",
        })
    }
}

impl std::str::FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "TYPE1" | "1" => Ok(ModelKind::Type1),
            "TYPE2" | "2" => Ok(ModelKind::Type2),
            _ => Err(Error::Domain(format!("unknown model kind {s:?}"))),
        }
    }
}

impl Serialize for ModelKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `y^power`, times the odd generator (`x` or `z`) when `odd` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub power: u64,
    pub odd: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelDga {
    pub kind: ModelKind,
    pub prime: u64,
    pub deg_even_gen: u64,
    pub max_degree: u64,
}

impl ModelDga {
    pub fn degree(&self, m: Monomial) -> u64 {
        let g = self.deg_even_gen;
        let base = m.power * g;
        match (self.kind, m.odd) {
            (_, false) => base,
            (ModelKind::Type1, true) => base + g - 1,
            (ModelKind::Type2, true) => base + g + 1,
        }
    }

    /// Monomials of degree `d`, in a fixed order.
    pub fn monomials_in_degree(&self, d: u64) -> Vec<Monomial> {
        let g = self.deg_even_gen;
        let mut out = Vec::new();
        if d % g == 0 {
            out.push(Monomial {
                power: d / g,
                odd: false,
            });
        }
        let shift = match self.kind {
            ModelKind::Type1 => g - 1,
            ModelKind::Type2 => g + 1,
        };
        if d >= shift && (d - shift) % g == 0 {
            out.push(Monomial {
                power: (d - shift) / g,
                odd: true,
            });
        }
        out
    }

    /// All monomials of degree at most `max_degree`.
    pub fn basis(&self) -> Vec<Monomial> {
        (0..=self.max_degree)
            .flat_map(|d| self.monomials_in_degree(d))
            .collect()
    }

    pub fn label(&self, m: Monomial) -> String {
        let y = match m.power {
            0 => String::new(),
            1 => "y".into(),
            a => format!("y^{a}"),
        };
        match (m.odd, self.kind) {
            (false, _) if y.is_empty() => "1".into(),
            (false, _) => y,
            (true, ModelKind::Type1) => format!("{y}x"),
            (true, ModelKind::Type2) => format!("z{y}"),
        }
    }

    /// The differential `d^r` on a monomial: a coefficient mod `p` and a
    /// target monomial, or `None` when it vanishes.
    ///
    /// Type 1: `d^(r+1)(y^b) = (b / p^r) y^(b-1) x` when `p^r | b`, zero
    /// otherwise, and `d^(r+1)(y^b x) = 0`. For `r = 0` this is the Leibniz
    /// extension of `d^1 y = x`.
    /// Type 2: `d^1(z y^a) = y^(a+1)`; higher differentials vanish.
    pub fn differential(&self, page: u32, m: Monomial) -> Option<(u64, Monomial)> {
        let p = self.prime;
        match self.kind {
            ModelKind::Type1 => {
                if m.odd || m.power == 0 {
                    return None;
                }
                let pr = p.checked_pow(page - 1)?;
                if m.power % pr != 0 {
                    return None;
                }
                let c = (m.power / pr) % p;
                (c != 0).then_some((
                    c,
                    Monomial {
                        power: m.power - 1,
                        odd: true,
                    },
                ))
            }
            ModelKind::Type2 => (page == 1 && m.odd).then_some((
                1,
                Monomial {
                    power: m.power + 1,
                    odd: false,
                },
            )),
        }
    }
}

/// The model of the given kind with even generator in degree `deg`,
/// enumerated through degree `max_degree`.
pub fn build_model(kind: ModelKind, p: u64, deg: u64, max_degree: u64) -> Result<ModelDga> {
    ensure_prime(p)?;
    if p == 2 {
        return Err(Error::Unsupported("model algebras need an odd prime".into()));
    }
    if deg == 0 || deg % 2 == 1 {
        return Err(Error::Domain(format!(
            "the polynomial generator needs positive even degree, got {deg}"
        )));
    }
    if max_degree < deg {
        return Err(Error::Domain(format!(
            "degree bound {max_degree} is below the generator degree {deg}"
        )));
    }
    Ok(ModelDga {
        kind,
        prime: p,
        deg_even_gen: deg,
        max_degree,
    })
}
