//! The projective line over GF(q), the determinant pairing, the four-point
//! sign function and the action of PGL(2, q).
//!
//! Vertex numbering: `[x:1]` gets the canonical rank of `x`, and `[1:0]`
//! gets index `q`.

use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldElement, FieldSpec};

/// Default largest field order accepted by [`pgl_enumerate`].
pub const DEFAULT_PGL_CAP: u64 = 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProjectiveError {
    #[error("(0, 0) does not represent a projective point")]
    ZeroVector,
    #[error("matrix is singular")]
    Singular,
    #[error("refusing to enumerate PGL(2, {q}): order cap is {cap}")]
    CapExceeded { q: u64, cap: u64 },
    #[error("vertex index {index} out of range for a projective line with {points} points")]
    IndexOutOfRange { index: usize, points: usize },
}

/// A point of P^1(GF(q)) stored by its canonical representative `(x, 1)`
/// or `(1, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ProjPoint {
    rep: [FieldElement; 2],
}

impl ProjPoint {
    /// `[a:b]`, rescaled to `(a/b, 1)` or `(1, 0)`.
    pub fn normalize(
        spec: &FieldSpec,
        a: &FieldElement,
        b: &FieldElement,
    ) -> Result<Self, ProjectiveError> {
        if b.is_zero() {
            if a.is_zero() {
                return Err(ProjectiveError::ZeroVector);
            }
            return Ok(Self::infinity(spec));
        }
        let binv = spec.inv(b).expect("b is nonzero");
        Ok(Self::finite(spec, spec.mul(a, &binv)))
    }

    pub fn finite(spec: &FieldSpec, x: FieldElement) -> Self {
        ProjPoint {
            rep: [x, spec.one()],
        }
    }

    pub fn infinity(spec: &FieldSpec) -> Self {
        ProjPoint {
            rep: [spec.one(), spec.zero()],
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.rep[1].is_zero()
    }

    pub fn rep(&self) -> &[FieldElement; 2] {
        &self.rep
    }

    pub fn index(&self, spec: &FieldSpec) -> usize {
        if self.is_infinity() {
            spec.order() as usize
        } else {
            spec.rank(&self.rep[0])
        }
    }

    pub fn from_index(spec: &FieldSpec, index: usize) -> Result<Self, ProjectiveError> {
        let q = spec.order() as usize;
        match index {
            i if i < q => Ok(Self::finite(spec, spec.from_rank(i))),
            i if i == q => Ok(Self::infinity(spec)),
            i => Err(ProjectiveError::IndexOutOfRange {
                index: i,
                points: q + 1,
            }),
        }
    }
}

/// All `q + 1` points in vertex-index order.
pub fn points(spec: &FieldSpec) -> Vec<ProjPoint> {
    spec.elements()
        .map(|x| ProjPoint::finite(spec, x))
        .chain(std::iter::once(ProjPoint::infinity(spec)))
        .collect()
}

/// `D(u, v) = u_1 v_2 - u_2 v_1`.
pub fn det_pair(spec: &FieldSpec, u: &[FieldElement; 2], v: &[FieldElement; 2]) -> FieldElement {
    spec.sub(&spec.mul(&u[0], &v[1]), &spec.mul(&u[1], &v[0]))
}

/// `chi(D(a,b) D(b,c) D(c,d) D(d,a))` on arbitrary nonzero representatives.
///
/// Returns 0 whenever two of the arguments are the same projective point.
pub fn s_value_reps(spec: &FieldSpec, reps: [&[FieldElement; 2]; 4]) -> i8 {
    for i in 0..4 {
        for j in i + 1..4 {
            if det_pair(spec, reps[i], reps[j]).is_zero() {
                return 0;
            }
        }
    }
    let mut prod = spec.one();
    for i in 0..4 {
        prod = spec.mul(&prod, &det_pair(spec, reps[i], reps[(i + 1) % 4]));
    }
    spec.chi(&prod)
}

/// The four-point sign `S(a, b, c, d)`; invariant under cyclic shifts.
pub fn s_value(spec: &FieldSpec, a: &ProjPoint, b: &ProjPoint, c: &ProjPoint, d: &ProjPoint) -> i8 {
    s_value_reps(spec, [a.rep(), b.rep(), c.rep(), d.rep()])
}

/// An element of PGL(2, q): the scalar class of an invertible matrix
/// `[[a, b], [c, d]]`, stored with its first nonzero entry equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PglElement {
    entries: [FieldElement; 4],
}

impl PglElement {
    pub fn new(
        spec: &FieldSpec,
        a: FieldElement,
        b: FieldElement,
        c: FieldElement,
        d: FieldElement,
    ) -> Result<Self, ProjectiveError> {
        let det = spec.sub(&spec.mul(&a, &d), &spec.mul(&b, &c));
        if det.is_zero() {
            return Err(ProjectiveError::Singular);
        }
        let lead = [&a, &b, &c, &d]
            .into_iter()
            .find(|e| !e.is_zero())
            .expect("nonsingular matrix has a nonzero entry");
        let scale = spec.inv(lead).expect("nonzero");
        Ok(PglElement {
            entries: [a, b, c, d].map(|e| spec.mul(&e, &scale)),
        })
    }

    pub fn identity(spec: &FieldSpec) -> Self {
        PglElement {
            entries: [spec.one(), spec.zero(), spec.zero(), spec.one()],
        }
    }

    pub fn entries(&self) -> &[FieldElement; 4] {
        &self.entries
    }

    pub fn det(&self, spec: &FieldSpec) -> FieldElement {
        let [a, b, c, d] = &self.entries;
        spec.sub(&spec.mul(a, d), &spec.mul(b, c))
    }

    /// `[u1 : u2] -> [a u1 + b u2 : c u1 + d u2]`.
    pub fn apply(&self, spec: &FieldSpec, x: &ProjPoint) -> ProjPoint {
        let [a, b, c, d] = &self.entries;
        let [u1, u2] = x.rep();
        let top = spec.add(&spec.mul(a, u1), &spec.mul(b, u2));
        let bottom = spec.add(&spec.mul(c, u1), &spec.mul(d, u2));
        ProjPoint::normalize(spec, &top, &bottom)
            .expect("invertible matrix maps nonzero vectors to nonzero vectors")
    }

    /// The induced permutation of vertex indices `0..=q`.
    pub fn permutation(&self, spec: &FieldSpec) -> Vec<usize> {
        points(spec)
            .iter()
            .map(|x| self.apply(spec, x).index(spec))
            .collect()
    }
}

/// Every element of PGL(2, q), without duplicates. Refuses fields with
/// `q > cap`.
pub fn pgl_enumerate(spec: &FieldSpec, cap: u64) -> Result<Vec<PglElement>, ProjectiveError> {
    let q = spec.order();
    if q > cap {
        return Err(ProjectiveError::CapExceeded { q, cap });
    }
    let elems: Vec<FieldElement> = spec.elements().collect();
    let zero = spec.zero();
    let one = spec.one();
    let mut out = Vec::with_capacity((q * (q * q - 1)) as usize);
    // first nonzero entry is a
    for b in &elems {
        for c in &elems {
            for d in &elems {
                if let Ok(g) = PglElement::new(spec, one.clone(), b.clone(), c.clone(), d.clone()) {
                    out.push(g);
                }
            }
        }
    }
    // a = 0, first nonzero entry is b
    for c in &elems {
        for d in &elems {
            if let Ok(g) = PglElement::new(spec, zero.clone(), one.clone(), c.clone(), d.clone()) {
                out.push(g);
            }
        }
    }
    Ok(out)
}
