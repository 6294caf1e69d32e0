use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::laurent::{Ctx, ExponentVector, LaurentPoly, RingContext};
use crate::matrix::PolyMatrix;

use super::diagram::{ArcId, Crossing, Diagram};

/// Which group of monomial weights the relations live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `{u, v}`
    TwoVar,
    /// `u_1..u_n, v_1..v_n`
    Multi,
    /// `{u, v, alpha}`
    Welded3,
    /// `u_i, v_i, alpha_i`
    WeldedMulti,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::TwoVar, Mode::Multi, Mode::Welded3, Mode::WeldedMulti];

    pub fn is_welded(self) -> bool {
        matches!(self, Mode::Welded3 | Mode::WeldedMulti)
    }

    pub fn is_indexed(self) -> bool {
        matches!(self, Mode::Multi | Mode::WeldedMulti)
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::TwoVar => "2var",
            Mode::Multi => "multi",
            Mode::Welded3 => "w3",
            Mode::WeldedMulti => "wmulti",
        }
    }

    pub fn ctx(self, n: usize) -> Ctx {
        match self {
            Mode::TwoVar => RingContext::new(&["u", "v"]),
            Mode::Welded3 => RingContext::new(&["u", "v", "alpha"]),
            Mode::Multi => Ok(RingContext::indexed(&["u", "v"], n)),
            Mode::WeldedMulti => Ok(RingContext::indexed(&["u", "v", "alpha"], n)),
        }
        .expect("fixed names are valid")
    }

    fn arity(self, n: usize) -> usize {
        match self {
            Mode::TwoVar => 2,
            Mode::Welded3 => 3,
            Mode::Multi => 2 * n,
            Mode::WeldedMulti => 3 * n,
        }
    }

    /// Exponent-vector slot of variable family `base` (0 = u, 1 = v,
    /// 2 = alpha) for string `s`.
    fn slot(self, n: usize, base: usize, s: usize) -> usize {
        if self.is_indexed() {
            base * n + s
        } else {
            base
        }
    }

    fn unit(self, n: usize, base: usize, s: usize, e: i32) -> ExponentVector {
        let mut v = ExponentVector::zeros(self.arity(n));
        v.0[self.slot(n, base, s)] = e;
        v
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Mode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Degenerate(format!("unknown mode `{s}` (expected 2var, multi, w3 or wmulti)")))
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `dst = src^weight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaRelation {
    pub src: ArcId,
    pub dst: ArcId,
    pub weight: ExponentVector,
}

/// Bottom generator `x_j = a_{source[j]}^{weights[j]}`, all 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub source: Vec<usize>,
    pub weights: Vec<ExponentVector>,
}

/// Two relations per crossing. At a classical crossing of sign `ε` the
/// under strand picks up `u^ε` and the over strand `v^ε`, indexed by the
/// other strand's string in the multi-variable modes. At a virtual crossing
/// of chirality `c` strand `a` picks up `α^{-c}` and strand `b` picks up
/// `α^{c}`.
pub fn relations_of(d: &Diagram, mode: Mode) -> Result<Vec<LambdaRelation>> {
    let n = d.strands();
    let mut out = Vec::with_capacity(2 * d.crossings().len());
    for c in d.crossings() {
        match *c {
            Crossing::Classical { sign, over_in, over_out, under_in, under_out } => {
                let (so, su) = (d.string_of(over_in), d.string_of(under_in));
                let e = sign as i32;
                out.push(LambdaRelation { src: under_in, dst: under_out, weight: mode.unit(n, 0, so, e) });
                out.push(LambdaRelation { src: over_in, dst: over_out, weight: mode.unit(n, 1, su, e) });
            }
            Crossing::Virtual { chirality, a_in, a_out, b_in, b_out } => {
                if !mode.is_welded() {
                    return Err(Error::VirtualInClassicalMode(mode.name().into()));
                }
                let (sa, sb) = (d.string_of(a_in), d.string_of(b_in));
                let e = chirality as i32;
                out.push(LambdaRelation { src: a_in, dst: a_out, weight: mode.unit(n, 2, sb, -e) });
                out.push(LambdaRelation { src: b_in, dst: b_out, weight: mode.unit(n, 2, sa, e) });
            }
        }
    }
    Ok(out)
}

/// Eliminates the middle generators. Relations are read as undirected edges
/// carrying monomial potentials; every connected component must hold exactly
/// one top and one bottom arc and assign each arc a single potential.
pub fn eliminate(
    relations: &[LambdaRelation],
    tops: &[ArcId],
    bottoms: &[ArcId],
    arc_count: usize,
    arity: usize,
) -> Result<NormalForm> {
    let mut adj: Vec<Vec<(ArcId, ExponentVector)>> = vec![vec![]; arc_count];
    for r in relations {
        if r.src >= arc_count || r.dst >= arc_count {
            return Err(Error::MalformedDiagram("relation refers to an unknown arc".into()));
        }
        if r.weight.len() != arity {
            return Err(Error::ArityMismatch { expected: arity, got: r.weight.len() });
        }
        adj[r.src].push((r.dst, r.weight.clone()));
        adj[r.dst].push((r.src, r.weight.neg()));
    }
    let mut potential: Vec<Option<ExponentVector>> = vec![None; arc_count];
    let mut component = vec![usize::MAX; arc_count];
    for (s, &t) in tops.iter().enumerate() {
        if component[t] != usize::MAX {
            return Err(Error::MalformedDiagram(format!("top arcs {} and {} are joined", component[t] + 1, s + 1)));
        }
        component[t] = s;
        potential[t] = Some(ExponentVector::zeros(arity));
        let mut queue = VecDeque::from([t]);
        while let Some(a) = queue.pop_front() {
            let pa = potential[a].clone().expect("queued arcs have potentials");
            for (b, w) in &adj[a] {
                let pb = pa.add(w);
                match &potential[*b] {
                    None => {
                        potential[*b] = Some(pb);
                        component[*b] = s;
                        queue.push_back(*b);
                    }
                    Some(_) if component[*b] != s => {
                        return Err(Error::MalformedDiagram(format!(
                            "top arcs {} and {} are joined",
                            component[*b] + 1,
                            s + 1
                        )));
                    }
                    Some(q) if *q != pb => {
                        return Err(Error::MalformedDiagram("inconsistent relations around a cycle".into()));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let mut source = Vec::with_capacity(bottoms.len());
    let mut weights = Vec::with_capacity(bottoms.len());
    let mut hit = vec![false; tops.len()];
    for (j, &b) in bottoms.iter().enumerate() {
        let s = component[b];
        if s == usize::MAX {
            return Err(Error::MalformedDiagram(format!("bottom arc {} is not chained to a top arc", j + 1)));
        }
        if std::mem::replace(&mut hit[s], true) {
            return Err(Error::MalformedDiagram(format!("top arc {} reaches two bottom arcs", s + 1)));
        }
        source.push(s);
        weights.push(potential[b].clone().expect("component members have potentials"));
    }
    Ok(NormalForm { source, weights })
}

/// Signed count of self-crossings per string.
pub fn self_writhe(d: &Diagram) -> Vec<i64> {
    let mut k = vec![0i64; d.strands()];
    for c in d.crossings() {
        if let Crossing::Classical { sign, over_in, under_in, .. } = *c {
            let s = d.string_of(over_in);
            if s == d.string_of(under_in) {
                k[s] += sign as i64;
            }
        }
    }
    k
}

/// Multiplies `w_j` by `(u v)^{-k}` for the writhe `k` of string `i_j`.
pub fn self_writhe_correct(nf: &NormalForm, d: &Diagram, mode: Mode) -> NormalForm {
    let n = d.strands();
    let k = self_writhe(d);
    let weights = nf
        .source
        .iter()
        .zip(&nf.weights)
        .map(|(&s, w)| {
            let e = -(k[s] as i32);
            w.add(&mode.unit(n, 0, s, e)).add(&mode.unit(n, 1, s, e))
        })
        .collect();
    NormalForm { source: nf.source.clone(), weights }
}

pub fn normal_form(d: &Diagram, mode: Mode, correct: bool) -> Result<NormalForm> {
    let rels = relations_of(d, mode)?;
    let nf = eliminate(&rels, d.top(), d.bottom(), d.arc_count(), mode.arity(d.strands()))?;
    Ok(if correct { self_writhe_correct(&nf, d, mode) } else { nf })
}

/// The monomial matrix with entry `(i_j, j) = w_j`.
pub fn normal_form_matrix(nf: &NormalForm, ctx: &Ctx) -> Result<PolyMatrix> {
    let n = nf.source.len();
    let mut m = PolyMatrix::zeros(n, n);
    for (j, (&i, w)) in nf.source.iter().zip(&nf.weights).enumerate() {
        m.set(i, j, LaurentPoly::monomial(ctx, w.clone(), 1)?);
    }
    Ok(m)
}

pub fn tym_matrix_with(d: &Diagram, mode: Mode, correct: bool) -> Result<PolyMatrix> {
    let nf = normal_form(d, mode, correct)?;
    normal_form_matrix(&nf, &mode.ctx(d.strands()))
}

/// The (self-writhe corrected) Tong-Yang-Ma matrix of a diagram.
pub fn tym_matrix(d: &Diagram, mode: Mode) -> Result<PolyMatrix> {
    tym_matrix_with(d, mode, true)
}
