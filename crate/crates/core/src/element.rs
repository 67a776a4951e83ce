use std::fmt;

use crate::matrix::Matrix;

/// Canonical encoding of a carrier element.
///
/// Within one carrier every element uses the same variant, so the derived
/// ordering is the canonical carrier order: numeric for integers, one-line
/// notation for permutations, row-major lexicographic for matrices and
/// lexicographic (first component first) for pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Int(i64),
    /// Zero-based images: `perm[i]` is the image of `i`.
    Perm(Vec<u8>),
    Vector(Vec<u32>),
    Matrix(Matrix),
    Pair(Box<Element>, Box<Element>),
}

impl Element {
    pub fn pair(a: Element, b: Element) -> Element {
        Element::Pair(Box::new(a), Box::new(b))
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Element::Int(v) => Some(*v),
            _ => None,
        }
    }

    pub fn as_perm(&self) -> Option<&[u8]> {
        match self {
            Element::Perm(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_vector(&self) -> Option<&[u32]> {
        match self {
            Element::Vector(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_matrix(&self) -> Option<&Matrix> {
        match self {
            Element::Matrix(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<(&Element, &Element)> {
        match self {
            Element::Pair(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Int(v) => write!(f, "{v}"),
            // one-line notation, 1-based
            Element::Perm(p) => {
                write!(f, "[")?;
                for (i, x) in p.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{}", x + 1)?;
                }
                write!(f, "]")
            }
            Element::Vector(v) => {
                write!(f, "(")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            Element::Matrix(m) => write!(f, "{m}"),
            Element::Pair(a, b) => write!(f, "<{a}; {b}>"),
        }
    }
}

impl From<Matrix> for Element {
    fn from(m: Matrix) -> Self {
        Element::Matrix(m)
    }
}
