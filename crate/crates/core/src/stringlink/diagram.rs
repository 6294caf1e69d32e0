use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::matrix::Permutation;
use crate::words::{BraidWord, Letter};

pub type ArcId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Crossing {
    Classical {
        sign: i8,
        over_in: ArcId,
        over_out: ArcId,
        under_in: ArcId,
        under_out: ArcId,
    },
    /// Chirality `+1` means strand `a` passes `b` from left to right as in a
    /// virtual generator `τ_k` with `a` entering at position `k`.
    Virtual {
        chirality: i8,
        a_in: ArcId,
        a_out: ArcId,
        b_in: ArcId,
        b_out: ArcId,
    },
}

/// A (welded) string link diagram as an incidence structure of arcs and
/// crossings.
///
/// `top[s]` is the first arc of string `s`; `bottom[j]` is the arc ending at
/// bottom position `j`. Strings are numbered by their starting position.
#[derive(Clone, Debug)]
pub struct Diagram {
    n: usize,
    arc_names: Vec<String>,
    crossings: Vec<Crossing>,
    top: Vec<ArcId>,
    bottom: Vec<ArcId>,
    // Derived by traversal.
    string_of: Vec<usize>,
    perm: Permutation,
}

impl Diagram {
    /// Validates the incidence structure and traces the strings.
    pub fn new(
        n: usize,
        arc_names: Vec<String>,
        crossings: Vec<Crossing>,
        top: Vec<ArcId>,
        bottom: Vec<ArcId>,
    ) -> Result<Self> {
        let m = arc_names.len();
        let bad = |msg: String| Err(Error::MalformedDiagram(msg));
        if top.len() != n || bottom.len() != n {
            return bad(format!("expected {n} top and bottom arcs"));
        }
        let name = |a: ArcId| arc_names.get(a).cloned().unwrap_or_else(|| format!("#{a}"));
        // successor of each arc along its string, and how many times each arc
        // is produced/consumed
        let mut next: Vec<Option<ArcId>> = vec![None; m];
        let mut produced = vec![0usize; m];
        let mut consumed = vec![0usize; m];
        for &a in top.iter().chain(bottom.iter()) {
            if a >= m {
                return bad(format!("unknown arc {a}"));
            }
        }
        for &a in &top {
            produced[a] += 1;
        }
        for &a in &bottom {
            consumed[a] += 1;
        }
        for c in &crossings {
            let pairs = match *c {
                Crossing::Classical { over_in, over_out, under_in, under_out, sign } => {
                    if sign.abs() != 1 {
                        return bad(format!("crossing sign {sign}"));
                    }
                    [(over_in, over_out), (under_in, under_out)]
                }
                Crossing::Virtual { a_in, a_out, b_in, b_out, chirality } => {
                    if chirality.abs() != 1 {
                        return bad(format!("virtual chirality {chirality}"));
                    }
                    [(a_in, a_out), (b_in, b_out)]
                }
            };
            for (i, o) in pairs {
                if i >= m || o >= m {
                    return bad("crossing refers to an unknown arc".into());
                }
                consumed[i] += 1;
                produced[o] += 1;
                next[i] = Some(o);
            }
        }
        for a in 0..m {
            if produced[a] != 1 || consumed[a] != 1 {
                return bad(format!(
                    "arc `{}` starts {} and ends {} times, expected once each",
                    name(a),
                    produced[a],
                    consumed[a]
                ));
            }
        }
        let bottom_pos: HashMap<ArcId, usize> = bottom.iter().enumerate().map(|(j, &a)| (a, j)).collect();
        let mut string_of = vec![usize::MAX; m];
        let mut ends = vec![usize::MAX; n];
        for (s, &start) in top.iter().enumerate() {
            let mut a = start;
            loop {
                if string_of[a] != usize::MAX {
                    return bad(format!("arc `{}` reached twice", name(a)));
                }
                string_of[a] = s;
                match next[a] {
                    Some(b) => a = b,
                    None => break,
                }
            }
            ends[s] = *bottom_pos.get(&a).expect("an arc without successor is a bottom arc");
        }
        if let Some(a) = string_of.iter().position(|&s| s == usize::MAX) {
            return bad(format!("arc `{}` lies on a closed component", name(a)));
        }
        // τ(j) = string ending at position j
        let mut tau = vec![0; n];
        for (s, &j) in ends.iter().enumerate() {
            tau[j] = s;
        }
        Ok(Diagram { n, arc_names, crossings, top, bottom, string_of, perm: Permutation::from_zero_based(tau) })
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arc_names.len()
    }

    pub fn arc_name(&self, a: ArcId) -> &str {
        &self.arc_names[a]
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn top(&self) -> &[ArcId] {
        &self.top
    }

    pub fn bottom(&self) -> &[ArcId] {
        &self.bottom
    }

    /// The string (0-based starting position) an arc belongs to.
    pub fn string_of(&self, a: ArcId) -> usize {
        self.string_of[a]
    }

    /// `τ(j)`: the starting position of the string ending at position `j`.
    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    pub fn is_pure(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn has_virtual(&self) -> bool {
        self.crossings.iter().any(|c| matches!(c, Crossing::Virtual { .. }))
    }

    pub fn from_word(w: &BraidWord) -> Diagram {
        let mut b = DiagramBuilder::new(w.strands());
        for l in w.letters() {
            b.letter(*l);
        }
        b.finish()
    }

    /// Stacks `self` on top of `other`: bottom position `j` of `self` is
    /// glued to the top of string `j` of `other`.
    pub fn compose(&self, other: &Diagram) -> Result<Diagram> {
        if self.n != other.n {
            return Err(Error::StrandMismatch { expected: self.n, got: other.n });
        }
        let mut names = self.arc_names.clone();
        let mut map = vec![usize::MAX; other.arc_count()];
        for (j, &a) in other.top.iter().enumerate() {
            map[a] = self.bottom[j];
        }
        for a in 0..other.arc_count() {
            if map[a] == usize::MAX {
                map[a] = names.len();
                names.push(format!("{}'", other.arc_names[a]));
            }
        }
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| match *c {
            Crossing::Classical { sign, over_in, over_out, under_in, under_out } => Crossing::Classical {
                sign,
                over_in: map[over_in],
                over_out: map[over_out],
                under_in: map[under_in],
                under_out: map[under_out],
            },
            Crossing::Virtual { chirality, a_in, a_out, b_in, b_out } => {
                Crossing::Virtual { chirality, a_in: map[a_in], a_out: map[a_out], b_in: map[b_in], b_out: map[b_out] }
            }
        }));
        let bottom = other.bottom.iter().map(|&a| map[a]).collect();
        Diagram::new(self.n, names, crossings, self.top.clone(), bottom)
    }

    /// Parses the line-based diagram format.
    pub fn parse(src: &str) -> Result<Diagram> {
        let mut n = None;
        let mut ids: HashMap<String, ArcId> = HashMap::new();
        let mut names = Vec::new();
        let mut top: Vec<Option<ArcId>> = vec![];
        let mut bottom: Vec<Option<ArcId>> = vec![];
        let mut crossings = Vec::new();
        let mut arc = |s: &str, names: &mut Vec<String>| -> ArcId {
            *ids.entry(s.to_string()).or_insert_with(|| {
                names.push(s.to_string());
                names.len() - 1
            })
        };
        for (ln, raw) in src.lines().enumerate() {
            let ln = ln + 1;
            let line = raw.split('#').next().unwrap_or("");
            let fields: Vec<&str> = line.split_whitespace().collect();
            let Some(&kw) = fields.first() else { continue };
            let col_of = |k: usize| line.find(fields[k]).map_or(1, |c| c + 1);
            let perr = |k: usize, msg: String| Error::parse(ln, col_of(k), msg);
            let sign = |k: usize| match fields[k] {
                "+" => Ok(1i8),
                "-" => Ok(-1i8),
                s => Err(perr(k, format!("expected `+` or `-`, found `{s}`"))),
            };
            match kw {
                "strands" => {
                    if fields.len() != 2 {
                        return Err(perr(0, "expected `strands N`".into()));
                    }
                    let k: usize = fields[1]
                        .parse()
                        .ok()
                        .filter(|&k| k >= 1)
                        .ok_or_else(|| perr(1, "expected a positive strand count".into()))?;
                    n = Some(k);
                    top = vec![None; k];
                    bottom = vec![None; k];
                }
                "top" | "bottom" => {
                    let k = n.ok_or_else(|| perr(0, "`strands` must come first".into()))?;
                    if fields.len() != 3 {
                        return Err(perr(0, format!("expected `{kw} INDEX ARC`")));
                    }
                    let s: usize = fields[1]
                        .parse()
                        .ok()
                        .filter(|&s| s >= 1 && s <= k)
                        .ok_or_else(|| perr(1, format!("index must be in 1..={k}")))?;
                    let a = arc(fields[2], &mut names);
                    let slot = if kw == "top" { &mut top[s - 1] } else { &mut bottom[s - 1] };
                    if slot.replace(a).is_some() {
                        return Err(perr(1, format!("{kw} {s} given twice")));
                    }
                }
                "x" | "v" => {
                    if fields.len() != 6 {
                        return Err(perr(0, format!("expected `{kw} SIGN IN OUT IN OUT`")));
                    }
                    let s = sign(1)?;
                    let a: Vec<ArcId> = fields[2..6].iter().map(|f| arc(f, &mut names)).collect();
                    crossings.push(if kw == "x" {
                        Crossing::Classical { sign: s, over_in: a[0], over_out: a[1], under_in: a[2], under_out: a[3] }
                    } else {
                        Crossing::Virtual { chirality: s, a_in: a[0], a_out: a[1], b_in: a[2], b_out: a[3] }
                    });
                }
                other => return Err(perr(0, format!("unknown directive `{other}`"))),
            }
        }
        let n = n.ok_or_else(|| Error::parse(1, 1, "missing `strands N`"))?;
        let end = src.lines().count().max(1);
        let collect = |v: Vec<Option<ArcId>>, kw: &str| -> Result<Vec<ArcId>> {
            v.into_iter()
                .enumerate()
                .map(|(i, a)| a.ok_or_else(|| Error::parse(end, 1, format!("missing `{kw} {}`", i + 1))))
                .collect()
        };
        let top = collect(top, "top")?;
        let bottom = collect(bottom, "bottom")?;
        Diagram::new(n, names, crossings, top, bottom)
    }

    pub fn render(&self) -> String {
        let nm = |a: ArcId| self.arc_names[a].as_str();
        let sg = |s: i8| if s > 0 { "+" } else { "-" };
        let mut out = format!("strands {}\n", self.n);
        for (s, &a) in self.top.iter().enumerate() {
            let _ = writeln!(out, "top {} {}", s + 1, nm(a));
        }
        for (j, &a) in self.bottom.iter().enumerate() {
            let _ = writeln!(out, "bottom {} {}", j + 1, nm(a));
        }
        for c in &self.crossings {
            let _ = match *c {
                Crossing::Classical { sign, over_in, over_out, under_in, under_out } => {
                    writeln!(out, "x {} {} {} {} {}", sg(sign), nm(over_in), nm(over_out), nm(under_in), nm(under_out))
                }
                Crossing::Virtual { chirality, a_in, a_out, b_in, b_out } => {
                    writeln!(out, "v {} {} {} {} {}", sg(chirality), nm(a_in), nm(a_out), nm(b_in), nm(b_out))
                }
            };
        }
        out
    }
}

/// Builds braid-like diagrams strand position by strand position.
pub struct DiagramBuilder {
    n: usize,
    names: Vec<String>,
    at: Vec<ArcId>,
    top: Vec<ArcId>,
    crossings: Vec<Crossing>,
}

impl DiagramBuilder {
    pub fn new(n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|s| format!("a{s}")).collect();
        DiagramBuilder { n, names, at: (0..n).collect(), top: (0..n).collect(), crossings: vec![] }
    }

    fn fresh(&mut self) -> ArcId {
        self.names.push(format!("m{}", self.names.len() - self.n + 1));
        self.names.len() - 1
    }

    /// A classical crossing of positions `k`, `k + 1` (1-based). At a
    /// positive crossing the strand entering at `k + 1` passes over; at a
    /// negative one the strand entering at `k` does.
    pub fn cross(&mut self, k: usize, sign: i8) -> &mut Self {
        let (left, right) = (self.at[k - 1], self.at[k]);
        let new_left = self.fresh();
        let new_right = self.fresh();
        let c = if sign > 0 {
            Crossing::Classical { sign, over_in: right, over_out: new_left, under_in: left, under_out: new_right }
        } else {
            Crossing::Classical { sign, over_in: left, over_out: new_right, under_in: right, under_out: new_left }
        };
        self.crossings.push(c);
        self.at[k - 1] = new_left;
        self.at[k] = new_right;
        self
    }

    /// The virtual crossing `τ_k`.
    pub fn virtual_cross(&mut self, k: usize) -> &mut Self {
        let (left, right) = (self.at[k - 1], self.at[k]);
        let new_left = self.fresh();
        let new_right = self.fresh();
        self.crossings.push(Crossing::Virtual {
            chirality: 1,
            a_in: left,
            a_out: new_right,
            b_in: right,
            b_out: new_left,
        });
        self.at[k - 1] = new_left;
        self.at[k] = new_right;
        self
    }

    /// A Reidemeister I kink of the given sign on the strand at `pos`.
    pub fn kink(&mut self, pos: usize, sign: i8) -> &mut Self {
        let a = self.at[pos - 1];
        let b = self.fresh();
        let c = self.fresh();
        self.crossings.push(Crossing::Classical { sign, over_in: b, over_out: c, under_in: a, under_out: b });
        self.at[pos - 1] = c;
        self
    }

    pub fn letter(&mut self, l: Letter) -> &mut Self {
        match l {
            Letter::Sigma(k, s) => self.cross(k, s),
            Letter::Tau(k) => self.virtual_cross(k),
        }
    }

    pub fn finish(&self) -> Diagram {
        Diagram::new(self.n, self.names.clone(), self.crossings.clone(), self.top.clone(), self.at.clone())
            .expect("builder produces well-formed diagrams")
    }
}
