//! Packing runs of terms into named patterns, e.g.
//! `μ10 = (543) ⊕ μ8(607)^2 ⊕ π6(639)`.

use std::fmt;

use super::{core, subsegments};
use crate::dyck::{dyck_pred, DyckNumber};
use crate::error::{DyckError, Result};
use crate::levels::level_structural;

/// A named pattern stored by its offsets from the senior term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape {
    pub name: String,
    /// `top - term` for each term, in ascending term order (last is 0).
    pub offsets: Vec<u64>,
    /// Span on the number line: top minus the predecessor of the first term
    /// at the place the shape was taken from.
    pub len: u64,
}

impl Shape {
    pub fn count(&self) -> usize {
        self.offsets.len()
    }

    pub fn at(&self, top: u64) -> Result<Vec<u64>> {
        self.offsets
            .iter()
            .map(|&o| {
                top.checked_sub(o).ok_or_else(|| {
                    DyckError::Domain(format!("{} cannot have top {top}", self.name))
                })
            })
            .collect()
    }

    fn matches(&self, window: &[u64]) -> bool {
        let top = *window.last().expect("non-empty window");
        window.len() == self.offsets.len()
            && window
                .iter()
                .zip(&self.offsets)
                .all(|(&t, &o)| top.checked_sub(o) == Some(t))
    }
}

/// Append-only registry of named shapes. Identical shapes are stored once,
/// under the name they were first registered with.
#[derive(Debug, Clone, Default)]
pub struct ShapeLibrary {
    shapes: Vec<Shape>,
}

impl ShapeLibrary {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers the pattern `terms` under `name` and returns the name the
    /// shape is known by.
    pub fn register(&mut self, name: &str, terms: &[u64]) -> Result<String> {
        let (&first, &top) = match (terms.first(), terms.last()) {
            (Some(f), Some(t)) => (f, t),
            _ => return Err(DyckError::Domain("cannot register an empty shape".into())),
        };
        let offsets: Vec<u64> = terms.iter().map(|t| top - t).collect();
        if let Some(existing) = self.shapes.iter().find(|s| s.offsets == offsets) {
            return Ok(existing.name.clone());
        }
        if self.get(name).is_some() {
            return Err(DyckError::Domain(format!(
                "{name} already names another shape"
            )));
        }
        let first = DyckNumber::try_from(first)?;
        let len = top - dyck_pred(first)?.get();
        self.shapes.push(Shape {
            name: name.to_string(),
            offsets,
            len,
        });
        Ok(name.to_string())
    }

    pub fn get(&self, name: &str) -> Option<&Shape> {
        self.shapes.iter().find(|s| s.name == name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.shapes.iter().map(|s| s.name.as_str())
    }

    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shapes.is_empty()
    }

    /// Level shapes `π4`, `π6` and the core shapes `μ6`, `μ8`, `μ10`.
    pub fn bootstrap() -> Result<Self> {
        Self::standard(10)
    }

    /// `π4`, `π6`, the cores `μ6 ..= μ{max_core}` and, from level 12 on,
    /// the first and last subsegments `μn/1` and `μn/4` of each core.
    pub fn standard(max_core: u32) -> Result<Self> {
        let mut lib = ShapeLibrary::new();
        lib.register_level(4)?;
        lib.register_level(6)?;
        let mut n = 6;
        while n <= max_core {
            lib.register_core(n)?;
            n += 2;
        }
        Ok(lib)
    }

    pub fn register_level(&mut self, n: u32) -> Result<String> {
        let level = level_structural(n)?;
        self.register(&format!("π{n}"), &level.terms)
    }

    /// Registers `μn` and, for `n >= 12`, its first and last subsegments.
    pub fn register_core(&mut self, n: u32) -> Result<()> {
        let c = core(n)?;
        self.register(&format!("μ{n}"), &c.terms)?;
        if n >= 12 {
            self.register_subsegments(n)?;
        }
        Ok(())
    }

    pub fn register_subsegments(&mut self, n: u32) -> Result<()> {
        let parts = subsegments(&core(n)?)?;
        self.register(&format!("μ{n}/1"), &parts[0])?;
        self.register(&format!("μ{n}/4"), &parts[3])?;
        Ok(())
    }

    /// A copy without the named shape, used when decomposing the pattern
    /// that shape was taken from.
    pub fn without(&self, name: &str) -> Self {
        ShapeLibrary {
            shapes: self
                .shapes
                .iter()
                .filter(|s| s.name != name)
                .cloned()
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionExpr {
    NamedPattern {
        name: String,
        top: u64,
    },
    Singleton(u64),
    Join(Vec<DecompositionExpr>),
    /// `k` adjacent copies ending at the child's top.
    Power {
        child: Box<DecompositionExpr>,
        k: u32,
    },
}

impl DecompositionExpr {
    /// Materializes the expression against the shapes of `lib`.
    pub fn evaluate(&self, lib: &ShapeLibrary) -> Result<Vec<u64>> {
        match self {
            DecompositionExpr::Singleton(t) => Ok(vec![*t]),
            DecompositionExpr::NamedPattern { name, top } => lookup(lib, name)?.at(*top),
            DecompositionExpr::Join(parts) => {
                let mut out = Vec::new();
                for part in parts {
                    out.extend(part.evaluate(lib)?);
                }
                Ok(out)
            }
            DecompositionExpr::Power { child, k } => {
                let DecompositionExpr::NamedPattern { name, top } = child.as_ref() else {
                    return Err(DyckError::Domain("powers apply to named patterns".into()));
                };
                let shape = lookup(lib, name)?;
                let mut out = Vec::with_capacity(shape.count() * *k as usize);
                for j in (0..u64::from(*k)).rev() {
                    let shift = j * shape.len;
                    let copy_top = top.checked_sub(shift).ok_or_else(|| {
                        DyckError::Domain(format!("{name}({top})^{k} reaches below zero"))
                    })?;
                    out.extend(shape.at(copy_top)?);
                }
                Ok(out)
            }
        }
    }
}

fn lookup<'a>(lib: &'a ShapeLibrary, name: &str) -> Result<&'a Shape> {
    lib.get(name)
        .ok_or_else(|| DyckError::Domain(format!("unknown shape {name}")))
}

impl fmt::Display for DecompositionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompositionExpr::Singleton(t) => write!(f, "({t})"),
            DecompositionExpr::NamedPattern { name, top } => write!(f, "{name}({top})"),
            DecompositionExpr::Power { child, k } => write!(f, "{child}^{k}"),
            DecompositionExpr::Join(parts) => {
                // Runs of singletons print as one tuple.
                let mut first = true;
                let mut i = 0;
                while i < parts.len() {
                    if !first {
                        f.write_str(" ⊕ ")?;
                    }
                    first = false;
                    if let DecompositionExpr::Singleton(_) = parts[i] {
                        let mut terms = Vec::new();
                        while let Some(DecompositionExpr::Singleton(t)) = parts.get(i) {
                            terms.push(t.to_string());
                            i += 1;
                        }
                        write!(f, "({})", terms.join(", "))?;
                    } else {
                        write!(f, "{}", parts[i])?;
                        i += 1;
                    }
                }
                Ok(())
            }
        }
    }
}

/// Greedy packing from the senior end: at each position the longest library
/// shape ending there wins, unmatched terms stay singletons, and adjacent
/// copies of one shape collapse into a power.
///
/// Single-term shapes are never matched.
pub fn decompose(terms: &[u64], lib: &ShapeLibrary) -> DecompositionExpr {
    let mut candidates: Vec<&Shape> = lib.shapes.iter().filter(|s| s.count() >= 2).collect();
    candidates.sort_by_key(|s| std::cmp::Reverse(s.count()));

    let mut parts = Vec::new();
    let mut end = terms.len();
    while end > 0 {
        let found = candidates
            .iter()
            .find(|s| s.count() <= end && s.matches(&terms[end - s.count()..end]));
        match found {
            Some(shape) => {
                parts.push(DecompositionExpr::NamedPattern {
                    name: shape.name.clone(),
                    top: terms[end - 1],
                });
                end -= shape.count();
            }
            None => {
                parts.push(DecompositionExpr::Singleton(terms[end - 1]));
                end -= 1;
            }
        }
    }
    parts.reverse();
    let mut parts = collapse_powers(parts, lib);
    if parts.len() == 1 {
        parts.pop().expect("one part")
    } else {
        DecompositionExpr::Join(parts)
    }
}

fn collapse_powers(parts: Vec<DecompositionExpr>, lib: &ShapeLibrary) -> Vec<DecompositionExpr> {
    let mut out: Vec<DecompositionExpr> = Vec::with_capacity(parts.len());
    for part in parts {
        if let DecompositionExpr::NamedPattern { name, top } = &part {
            let len = lib.get(name).map(|s| s.len).unwrap_or(0);
            let merged = match out.last_mut() {
                Some(DecompositionExpr::NamedPattern {
                    name: prev,
                    top: prev_top,
                }) if prev == name && *prev_top + len == *top => Some(DecompositionExpr::Power {
                    child: Box::new(part.clone()),
                    k: 2,
                }),
                Some(DecompositionExpr::Power { child, k }) => match child.as_mut() {
                    DecompositionExpr::NamedPattern {
                        name: prev,
                        top: prev_top,
                    } if prev == name && *prev_top + len == *top => {
                        *prev_top = *top;
                        *k += 1;
                        continue;
                    }
                    _ => None,
                },
                _ => None,
            };
            if let Some(power) = merged {
                *out.last_mut().expect("merged with the last part") = power;
                continue;
            }
        }
        out.push(part);
    }
    out
}
