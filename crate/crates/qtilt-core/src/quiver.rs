//! Quivers, paths, relations, presentations, chordless cycles and admissible
//! cuts.
//!
//! Paths store their arrows in order of application (the first arrow applied
//! sits at index 0); the textual notation `c*b*a` composes right to left, so it
//! denotes the path `[a, b, c]`.

use crate::error::{Error, Result};
use crate::Rat;
use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quiver {
    pub name: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(
        name: impl Into<String>,
        vertices: Vec<String>,
        arrows: Vec<(String, String, String)>,
    ) -> Result<Self> {
        let name = name.into();
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        let index: HashMap<&String, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut arrow_names = HashSet::new();
        let mut out = Vec::new();
        for (id, src, tgt) in arrows {
            if !arrow_names.insert(id.clone()) {
                return Err(Error::InvalidQuiver(format!("duplicate identifier `{id}`")));
            }
            let (&s, &t) = match (index.get(&src), index.get(&tgt)) {
                (Some(s), Some(t)) => (s, t),
                _ => {
                    return Err(Error::InvalidQuiver(format!(
                        "arrow `{id}` has undeclared endpoint"
                    )))
                }
            };
            if s == t {
                return Err(Error::InvalidQuiver(format!("arrow `{id}` is a loop")));
            }
            out.push(Arrow { name: id, source: s, target: t });
        }
        Ok(Quiver { name, vertices, arrows: out })
    }

    /// Convenience constructor from string slices; panics on invalid input.
    pub fn from_arrows(name: &str, vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Self {
        Quiver::new(
            name,
            vertices.iter().map(|s| s.to_string()).collect(),
            arrows
                .iter()
                .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string()))
                .collect(),
        )
        .expect("invalid quiver literal")
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.source == v)
            .map(|(i, _)| i)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.target == v)
            .map(|(i, _)| i)
    }

    pub fn arrows_between(&self, x: usize, y: usize) -> Vec<usize> {
        self.arrows
            .iter()
            .enumerate()
            .filter(|(_, a)| (a.source == x && a.target == y) || (a.source == y && a.target == x))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        let n = self.n_vertices();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for a in self.arrows_from(v) {
                let t = self.arrows[a].target;
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    queue.push(t);
                }
            }
        }
        seen == n
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n_vertices();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                if a.source == v && !seen[a.target] {
                    seen[a.target] = true;
                    stack.push(a.target);
                }
                if a.target == v && !seen[a.source] {
                    seen[a.source] = true;
                    stack.push(a.source);
                }
            }
        }
        seen.iter().all(|&b| b)
    }

    /// Trivial path at a vertex.
    pub fn trivial_path(&self, v: usize) -> Path {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    /// Build a path from arrows listed in order of application.
    pub fn path(&self, arrows: &[usize]) -> Result<Path> {
        if arrows.is_empty() {
            return Err(Error::InvalidQuiver("empty arrow list needs a base vertex".into()));
        }
        for w in arrows.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return Err(Error::InvalidQuiver(format!(
                    "arrows `{}` and `{}` do not compose",
                    self.arrows[w[0]].name, self.arrows[w[1]].name
                )));
            }
        }
        Ok(Path {
            source: self.arrows[arrows[0]].source,
            target: self.arrows[*arrows.last().unwrap()].target,
            arrows: arrows.to_vec(),
        })
    }

    /// Path from arrow names given in right-to-left composition order.
    pub fn path_named(&self, composed: &[&str]) -> Result<Path> {
        let mut idx = Vec::new();
        for name in composed.iter().rev() {
            idx.push(
                self.arrow_index(name)
                    .ok_or_else(|| Error::InvalidQuiver(format!("unknown arrow `{name}`")))?,
            );
        }
        self.path(&idx)
    }

    pub fn display_path(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e_{}", self.vertices[p.source])
        } else {
            p.arrows.iter().rev().map(|&a| self.arrows[a].name.clone()).join("*")
        }
    }
}

/// A path; `arrows[0]` is applied first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `next` (so `next * self` in right-to-left notation).
    pub fn then(&self, next: &Path) -> Option<Path> {
        if self.target != next.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Some(Path { source: self.source, target: next.target, arrows })
    }
}

/// A linear combination of parallel paths, each of length at least two.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Relation {
    pub terms: Vec<(Rat, Path)>,
}

impl Relation {
    pub fn new(terms: Vec<(Rat, Path)>) -> Result<Self> {
        let nonzero: Vec<(Rat, Path)> = terms.into_iter().filter(|(c, _)| !c.is_zero()).collect();
        if nonzero.is_empty() {
            return Err(Error::InvalidPresentation("relation with no nonzero term".into()));
        }
        let (src, tgt) = (nonzero[0].1.source, nonzero[0].1.target);
        for (_, p) in &nonzero {
            if p.source != src || p.target != tgt {
                return Err(Error::InvalidPresentation("relation terms are not parallel".into()));
            }
            if p.len() < 2 {
                return Err(Error::InvalidPresentation(
                    "relation term of length < 2 violates admissibility".into(),
                ));
            }
        }
        Ok(Relation { terms: nonzero })
    }

    pub fn zero_relation(p: Path) -> Result<Self> {
        Relation::new(vec![(Rat::one(), p)])
    }

    pub fn commutativity(p: Path, q: Path) -> Result<Self> {
        Relation::new(vec![(Rat::one(), p), (-Rat::one(), q)])
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target
    }

    pub fn is_zero_relation(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn max_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).max().unwrap()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Presentation {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub truncation_bound: usize,
}

impl Presentation {
    pub fn new(quiver: Quiver, relations: Vec<Relation>) -> Self {
        let bound = 2 * quiver.n_vertices().max(2);
        Presentation { quiver, relations, truncation_bound: bound }
    }

    pub fn hereditary(quiver: Quiver) -> Self {
        Presentation::new(quiver, Vec::new())
    }

    pub fn with_truncation(mut self, n: usize) -> Self {
        self.truncation_bound = n;
        self
    }
}

/// A subset of the arrows of a quiver.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Cut {
    pub arrows: BTreeSet<usize>,
}

impl Cut {
    pub fn empty() -> Self {
        Cut { arrows: BTreeSet::new() }
    }

    pub fn of(arrows: impl IntoIterator<Item = usize>) -> Self {
        Cut { arrows: arrows.into_iter().collect() }
    }

    pub fn names(&self, q: &Quiver) -> Vec<String> {
        self.arrows.iter().map(|&a| q.arrows[a].name.clone()).collect()
    }
}

/// A chordless cycle: the full subquiver on `vertices` has every vertex of
/// degree exactly two. `oriented` holds when at each vertex one arrow starts
/// and one stops.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChordlessCycle {
    pub vertices: Vec<usize>,
    pub arrows: Vec<usize>,
    pub oriented: bool,
}

/// All chordless cycles of the quiver, without duplicates up to rotation and
/// reflection of the vertex cycle.
pub fn chordless_cycles(q: &Quiver) -> Vec<ChordlessCycle> {
    let n = q.n_vertices();
    let mut cycles: Vec<ChordlessCycle> = Vec::new();

    // Two-vertex cycles: pairs joined by exactly two arrows.
    for x in 0..n {
        for y in x + 1..n {
            let between = q.arrows_between(x, y);
            if between.len() == 2 {
                let a0 = &q.arrows[between[0]];
                let a1 = &q.arrows[between[1]];
                let oriented = a0.source != a1.source;
                cycles.push(ChordlessCycle { vertices: vec![x, y], arrows: between, oriented });
            }
        }
    }

    // Longer cycles: induced cycles of the underlying simple graph. The DFS
    // keeps the start vertex minimal in the cycle and kills reflections by
    // demanding second vertex < closing vertex.
    let mut adj = vec![vec![false; n]; n];
    for a in &q.arrows {
        adj[a.source][a.target] = true;
        adj[a.target][a.source] = true;
    }

    fn extend(
        adj: &[Vec<bool>],
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let start = path[0];
        let last = *path.last().unwrap();
        for next in start + 1..adj.len() {
            if !adj[last][next] || path.contains(&next) {
                continue;
            }
            // `next` may be adjacent only to `last`, and to `start` when it
            // closes the cycle.
            let adjacency: Vec<usize> =
                path.iter().copied().filter(|&v| adj[next][v]).collect();
            let closes = adj[next][start];
            let interior_ok = adjacency.iter().all(|&v| v == last || (closes && v == start));
            if !interior_ok {
                continue;
            }
            if closes && path.len() >= 2 {
                if path[1] < next {
                    let mut cycle = path.clone();
                    cycle.push(next);
                    out.push(cycle);
                }
                continue;
            }
            path.push(next);
            extend(adj, path, out);
            path.pop();
        }
    }

    let mut vertex_cycles = Vec::new();
    for start in 0..n {
        let mut path = vec![start];
        extend(&adj, &mut path, &mut vertex_cycles);
    }

    for cycle in vertex_cycles {
        if cycle.len() < 3 {
            continue;
        }
        let vs: HashSet<usize> = cycle.iter().copied().collect();
        let induced: Vec<usize> = (0..q.arrows.len())
            .filter(|&a| vs.contains(&q.arrows[a].source) && vs.contains(&q.arrows[a].target))
            .collect();
        // full subquiver must have all vertex degrees exactly two
        let degree_ok = cycle.iter().all(|&v| {
            induced
                .iter()
                .filter(|&&a| q.arrows[a].source == v || q.arrows[a].target == v)
                .count()
                == 2
        });
        if !degree_ok || induced.len() != cycle.len() {
            continue;
        }
        let oriented = cycle.iter().all(|&v| {
            let outs = induced.iter().filter(|&&a| q.arrows[a].source == v).count();
            let ins = induced.iter().filter(|&&a| q.arrows[a].target == v).count();
            outs == 1 && ins == 1
        });
        cycles.push(ChordlessCycle { vertices: cycle, arrows: induced, oriented });
    }
    cycles
}

/// Every arrow subset meeting each oriented chordless cycle in exactly one
/// arrow. Cuts range over arrows lying on oriented chordless cycles, so an
/// acyclic quiver has exactly one cut, the empty one.
pub fn enumerate_admissible_cuts(q: &Quiver) -> Vec<Cut> {
    let oriented: Vec<BTreeSet<usize>> = chordless_cycles(q)
        .into_iter()
        .filter(|c| c.oriented)
        .map(|c| c.arrows.into_iter().collect())
        .collect();
    let mut results: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut chosen: BTreeSet<usize> = BTreeSet::new();

    fn search(
        cycles: &[BTreeSet<usize>],
        idx: usize,
        chosen: &mut BTreeSet<usize>,
        results: &mut BTreeSet<BTreeSet<usize>>,
    ) {
        match cycles.get(idx) {
            None => {
                results.insert(chosen.clone());
            }
            Some(cycle) => match cycle.intersection(chosen).count() {
                1 => search(cycles, idx + 1, chosen, results),
                0 => {
                    for &a in cycle {
                        chosen.insert(a);
                        let earlier_ok =
                            cycles[..idx].iter().all(|c| c.intersection(chosen).count() <= 1);
                        if earlier_ok {
                            search(cycles, idx + 1, chosen, results);
                        }
                        chosen.remove(&a);
                    }
                }
                _ => {}
            },
        }
    }

    search(&oriented, 0, &mut chosen, &mut results);
    results.into_iter().map(|arrows| Cut { arrows }).collect()
}

/// Check whether `cut` is an admissible cut of `q` drawn from on-cycle arrows.
pub fn is_admissible_cut(q: &Quiver, cut: &Cut) -> bool {
    if !cut.arrows.iter().all(|&a| a < q.arrows.len()) {
        return false;
    }
    let cycles = chordless_cycles(q);
    let on_cycles: BTreeSet<usize> = cycles
        .iter()
        .filter(|c| c.oriented)
        .flat_map(|c| c.arrows.iter().copied())
        .collect();
    cut.arrows.iter().all(|a| on_cycles.contains(a))
        && cycles
            .iter()
            .filter(|c| c.oriented)
            .all(|c| c.arrows.iter().filter(|a| cut.arrows.contains(a)).count() == 1)
}

/// Vertex-simple paths parallel to the arrow, excluding the arrow itself.
pub fn parallel_paths(q: &Quiver, arrow: usize) -> Vec<Path> {
    let a = &q.arrows[arrow];
    simple_paths(q, a.source, a.target)
        .into_iter()
        .filter(|p| p.arrows != vec![arrow])
        .collect()
}

/// Vertex-simple paths antiparallel to the arrow (target back to source).
pub fn antiparallel_paths(q: &Quiver, arrow: usize) -> Vec<Path> {
    let a = &q.arrows[arrow];
    simple_paths(q, a.target, a.source)
}

/// Antiparallel paths that are shortest: no proper cyclic subpath, and the
/// full subquiver on the path's vertices together with the arrow contains no
/// further arrows.
pub fn shortest_antiparallel_paths(q: &Quiver, arrow: usize) -> Vec<Path> {
    antiparallel_paths(q, arrow)
        .into_iter()
        .filter(|p| {
            let mut vs: BTreeSet<usize> = [p.source, p.target].into_iter().collect();
            for &a in &p.arrows {
                vs.insert(q.arrows[a].source);
                vs.insert(q.arrows[a].target);
            }
            let induced = (0..q.arrows.len())
                .filter(|&a| vs.contains(&q.arrows[a].source) && vs.contains(&q.arrows[a].target))
                .count();
            induced == p.arrows.len() + 1
        })
        .collect()
}

fn simple_paths(q: &Quiver, from: usize, to: usize) -> Vec<Path> {
    fn dfs(
        q: &Quiver,
        at: usize,
        to: usize,
        visited: &mut Vec<bool>,
        arrows: &mut Vec<usize>,
        out: &mut Vec<Path>,
    ) {
        for a in q.arrows_from(at).collect::<Vec<_>>() {
            let t = q.arrows[a].target;
            if t == to {
                arrows.push(a);
                out.push(Path {
                    source: q.arrows[arrows[0]].source,
                    target: to,
                    arrows: arrows.clone(),
                });
                arrows.pop();
            } else if !visited[t] {
                visited[t] = true;
                arrows.push(a);
                dfs(q, t, to, visited, arrows, out);
                arrows.pop();
                visited[t] = false;
            }
        }
    }
    let mut out = Vec::new();
    if from == to {
        return out;
    }
    let mut visited = vec![false; q.n_vertices()];
    visited[from] = true;
    let mut arrows = Vec::new();
    dfs(q, from, to, &mut visited, &mut arrows, &mut out);
    out.sort();
    out
}

/// All paths from `from` to `to` in a directed (acyclic) quiver, including the
/// trivial path when `from == to`.
pub fn all_paths_directed(q: &Quiver, from: usize, to: usize) -> Result<Vec<Path>> {
    if !q.is_acyclic() {
        return Err(Error::CyclicQuiver);
    }
    let mut out = Vec::new();
    if from == to {
        out.push(q.trivial_path(from));
    }
    let mut stack: Vec<Vec<usize>> = q.arrows_from(from).map(|a| vec![a]).collect();
    while let Some(arrows) = stack.pop() {
        let last = *arrows.last().unwrap();
        let at = q.arrows[last].target;
        if at == to {
            out.push(q.path(&arrows)?);
        }
        for a in q.arrows_from(at) {
            let mut next = arrows.clone();
            next.push(a);
            stack.push(next);
        }
    }
    out.sort();
    Ok(out)
}

/// Deterministic DOT output; relations are rendered as dashed constraint
/// edges from source to target.
pub fn to_dot(p: &Presentation) -> String {
    let q = &p.quiver;
    let mut s = String::new();
    s.push_str(&format!("digraph \"{}\" {{\n", q.name));
    s.push_str("  rankdir=LR;\n");
    for v in &q.vertices {
        s.push_str(&format!("  \"{v}\";\n"));
    }
    for a in &q.arrows {
        s.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            q.vertices[a.source], q.vertices[a.target], a.name
        ));
    }
    for r in &p.relations {
        s.push_str(&format!(
            "  \"{}\" -> \"{}\" [style=dashed, color=gray, label=\"{}\"];\n",
            q.vertices[r.source()],
            q.vertices[r.target()],
            relation_to_string(q, r)
        ));
    }
    s.push_str("}\n");
    s
}

pub fn relation_to_string(q: &Quiver, r: &Relation) -> String {
    let mut s = String::new();
    for (i, (c, p)) in r.terms.iter().enumerate() {
        let mag = c.abs();
        let coef = if mag.is_one() { String::new() } else { format!("{mag}*") };
        if i == 0 {
            if c.is_negative() {
                s.push_str("- ");
            }
        } else if c.is_negative() {
            s.push_str(" - ");
        } else {
            s.push_str(" + ");
        }
        s.push_str(&coef);
        s.push_str(&q.display_path(p));
    }
    s
}

// ---------------------------------------------------------------------------
// text format
// ---------------------------------------------------------------------------

/// Parse the presentation text format:
///
/// ```text
/// quiver name
/// vertices v1 v2 v3
/// arrows
/// a: v1 -> v2
/// b: v2 -> v3
/// relations
/// b*a
/// c*b - 1/2*d*a
/// ```
///
/// A bare path is a zero relation; a difference of two paths is a
/// commutativity relation. Coefficients are exact rationals `p/q`.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    #[derive(PartialEq)]
    enum Section {
        Preamble,
        Arrows,
        Relations,
    }
    let mut name = String::new();
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut relation_lines: Vec<(usize, String)> = Vec::new();
    let mut section = Section::Preamble;
    let mut truncation: Option<usize> = None;

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        let lineno = lineno + 1;
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("quiver ") {
            name = rest.trim().to_string();
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices") {
            vertices.extend(rest.split_whitespace().map(|s| s.to_string()));
            continue;
        }
        if let Some(rest) = line.strip_prefix("truncation ") {
            truncation = Some(rest.trim().parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: "invalid truncation bound".into(),
            })?);
            continue;
        }
        if line == "arrows" {
            section = Section::Arrows;
            continue;
        }
        if line == "relations" {
            section = Section::Relations;
            continue;
        }
        match section {
            Section::Arrows => {
                let (id, rest) = line.split_once(':').ok_or(Error::Parse {
                    line: lineno,
                    msg: "expected `id: src -> tgt`".into(),
                })?;
                let (src, tgt) = rest.split_once("->").ok_or(Error::Parse {
                    line: lineno,
                    msg: "expected `src -> tgt`".into(),
                })?;
                arrows.push((
                    id.trim().to_string(),
                    src.trim().to_string(),
                    tgt.trim().to_string(),
                ));
            }
            Section::Relations => relation_lines.push((lineno, line.to_string())),
            Section::Preamble => {
                return Err(Error::Parse { line: lineno, msg: format!("unexpected `{line}`") })
            }
        }
    }

    let quiver = Quiver::new(name, vertices, arrows)
        .map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
    let mut relations = Vec::new();
    for (lineno, line) in relation_lines {
        relations.push(parse_relation(&quiver, &line).map_err(|e| match e {
            Error::Parse { msg, .. } => Error::Parse { line: lineno, msg },
            other => Error::Parse { line: lineno, msg: other.to_string() },
        })?);
    }
    let mut p = Presentation::new(quiver, relations);
    if let Some(n) = truncation {
        p.truncation_bound = n;
    }
    Ok(p)
}

/// Parse one relation line: `+`/`-`-separated terms `coef*idk*...*id1`.
pub fn parse_relation(q: &Quiver, line: &str) -> Result<Relation> {
    let mut terms = Vec::new();
    let mut rest = line.trim();
    let mut sign = Rat::one();
    if let Some(r) = rest.strip_prefix('-') {
        sign = -Rat::one();
        rest = r.trim_start();
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r.trim_start();
    }
    loop {
        let end = rest
            .char_indices()
            .find(|(i, c)| (*c == '+' || *c == '-') && *i > 0)
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        let term = rest[..end].trim();
        terms.push(parse_term(q, term, sign.clone())?);
        if end == rest.len() {
            break;
        }
        sign = if rest.as_bytes()[end] == b'-' { -Rat::one() } else { Rat::one() };
        rest = rest[end + 1..].trim_start();
    }
    Relation::new(terms)
}

fn parse_term(q: &Quiver, term: &str, sign: Rat) -> Result<(Rat, Path)> {
    let parts: Vec<&str> = term.split('*').map(|s| s.trim()).collect();
    if parts.is_empty() || parts[0].is_empty() {
        return Err(Error::Parse { line: 0, msg: "empty term".into() });
    }
    let (coef, arrow_names) = match parse_rat(parts[0]) {
        Some(c) => (c, &parts[1..]),
        None => (Rat::one(), &parts[..]),
    };
    if arrow_names.is_empty() {
        return Err(Error::Parse { line: 0, msg: format!("term `{term}` has no path") });
    }
    let path = q
        .path_named(arrow_names)
        .map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
    Ok((sign * coef, path))
}

fn parse_rat(s: &str) -> Option<Rat> {
    if let Some((num, den)) = s.split_once('/') {
        let n: i64 = num.trim().parse().ok()?;
        let d: i64 = den.trim().parse().ok()?;
        Some(Rat::new(n.into(), d.into()))
    } else {
        let n: i64 = s.trim().parse().ok()?;
        Some(Rat::from_integer(n.into()))
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "quiver {}", self.quiver.name)?;
        writeln!(f, "vertices {}", self.quiver.vertices.join(" "))?;
        writeln!(f, "arrows")?;
        for a in &self.quiver.arrows {
            writeln!(
                f,
                "{}: {} -> {}",
                a.name, self.quiver.vertices[a.source], self.quiver.vertices[a.target]
            )?;
        }
        if !self.relations.is_empty() {
            writeln!(f, "relations")?;
            for r in &self.relations {
                writeln!(f, "{}", relation_to_string(&self.quiver, r))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
pub mod tests {
    use super::*;

    pub fn three_cycle() -> Quiver {
        Quiver::from_arrows(
            "c3",
            &["1", "2", "3"],
            &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")],
        )
    }

    pub fn remark_4_9_quiver() -> Quiver {
        Quiver::from_arrows(
            "r49",
            &["1", "2", "3", "4"],
            &[
                ("ap", "1", "2"),
                ("app", "2", "3"),
                ("al", "1", "3"),
                ("be", "3", "4"),
                ("ga", "4", "1"),
            ],
        )
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Quiver::new(
            "bad",
            vec!["x".into()],
            vec![("l".into(), "x".into(), "x".into())]
        )
        .is_err());
        assert!(Quiver::new("bad", vec!["x".into(), "x".into()], vec![]).is_err());
    }

    #[test]
    fn chordless_cycle_of_three_cycle() {
        let cycles = chordless_cycles(&three_cycle());
        assert_eq!(cycles.len(), 1);
        assert!(cycles[0].oriented);
        assert_eq!(cycles[0].vertices.len(), 3);
    }

    #[test]
    fn chordless_cycles_of_remark_4_9() {
        let q = remark_4_9_quiver();
        let cycles = chordless_cycles(&q);
        assert_eq!(cycles.len(), 2);
        let c123 = cycles
            .iter()
            .find(|c| c.vertices.iter().copied().collect::<BTreeSet<_>>() == [0, 1, 2].into())
            .unwrap();
        assert!(!c123.oriented);
        let c134 = cycles
            .iter()
            .find(|c| c.vertices.iter().copied().collect::<BTreeSet<_>>() == [0, 2, 3].into())
            .unwrap();
        assert!(c134.oriented);
    }

    #[test]
    fn tree_quiver_has_no_cycles() {
        let a4 = Quiver::from_arrows(
            "a4",
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4")],
        );
        assert!(chordless_cycles(&a4).is_empty());
        assert_eq!(enumerate_admissible_cuts(&a4), vec![Cut::empty()]);
    }

    #[test]
    fn cuts_of_three_cycle() {
        let cuts = enumerate_admissible_cuts(&three_cycle());
        assert_eq!(cuts.len(), 3);
        for c in &cuts {
            assert_eq!(c.arrows.len(), 1);
        }
    }

    #[test]
    fn cuts_of_remark_4_9() {
        let q = remark_4_9_quiver();
        let cuts = enumerate_admissible_cuts(&q);
        assert_eq!(cuts.len(), 3);
        let al = q.arrow_index("al").unwrap();
        assert!(cuts.iter().any(|c| c.arrows == [al].into()));
        let ap = q.arrow_index("ap").unwrap();
        assert!(cuts.iter().all(|c| !c.arrows.contains(&ap)));
        assert!(is_admissible_cut(&q, &Cut::of([al])));
        assert!(!is_admissible_cut(&q, &Cut::of([ap])));
    }

    #[test]
    fn cut_cycle_intersection_invariant() {
        for q in [three_cycle(), remark_4_9_quiver()] {
            let cycles = chordless_cycles(&q);
            for cut in enumerate_admissible_cuts(&q) {
                for c in cycles.iter().filter(|c| c.oriented) {
                    assert_eq!(
                        c.arrows.iter().filter(|a| cut.arrows.contains(a)).count(),
                        1
                    );
                }
            }
        }
    }

    #[test]
    fn degree_invariant_of_cycles() {
        for q in [three_cycle(), remark_4_9_quiver()] {
            for c in chordless_cycles(&q) {
                let vs: HashSet<usize> = c.vertices.iter().copied().collect();
                for &v in &c.vertices {
                    let deg = q
                        .arrows
                        .iter()
                        .filter(|a| {
                            vs.contains(&a.source)
                                && vs.contains(&a.target)
                                && (a.source == v || a.target == v)
                        })
                        .count();
                    assert_eq!(deg, 2);
                }
            }
        }
    }

    #[test]
    fn antiparallel_of_three_cycle() {
        let q = three_cycle();
        let a = q.arrow_index("a").unwrap();
        let sp = shortest_antiparallel_paths(&q, a);
        assert_eq!(sp.len(), 1);
        assert_eq!(
            sp[0].arrows,
            vec![q.arrow_index("b").unwrap(), q.arrow_index("c").unwrap()]
        );
    }

    #[test]
    fn shortest_antiparallel_in_g22() {
        // G(2,2): v1 -> v2 -> v3, v1 -> v2' -> v3, eta: v3 -> v1
        let q = Quiver::from_arrows(
            "g22",
            &["v1", "v2", "v2p", "v3"],
            &[
                ("a1", "v1", "v2"),
                ("a2", "v2", "v3"),
                ("b1", "v1", "v2p"),
                ("b2", "v2p", "v3"),
                ("eta", "v3", "v1"),
            ],
        );
        let eta = q.arrow_index("eta").unwrap();
        assert_eq!(shortest_antiparallel_paths(&q, eta).len(), 2);
        let a2 = Quiver::from_arrows("a2", &["1", "2"], &[("a", "1", "2")]);
        assert!(antiparallel_paths(&a2, 0).is_empty());
    }

    #[test]
    fn parse_and_print_roundtrip() {
        let text = "quiver demo\nvertices 1 2 3\narrows\na: 1 -> 2\nb: 2 -> 3\nrelations\nb*a\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.quiver.n_vertices(), 3);
        assert_eq!(p.relations.len(), 1);
        assert_eq!(p.relations[0].terms[0].1.arrows, vec![0, 1]);
        let printed = p.to_string();
        let p2 = parse_presentation(&printed).unwrap();
        assert_eq!(p, p2);
    }

    #[test]
    fn parse_coefficients_and_differences() {
        let bad = "quiver d\nvertices 1 2 3\narrows\na: 1 -> 2\nb: 2 -> 3\nc: 1 -> 3\n\
                   relations\nb*a - c\n";
        assert!(parse_presentation(bad).is_err());
        let good = "quiver d\nvertices 1 2 3 4\narrows\na: 1 -> 2\nb: 2 -> 3\nc: 1 -> 4\nd: 4 -> 3\n\
                    relations\nb*a - 1/2*d*c\n";
        let p = parse_presentation(good).unwrap();
        assert_eq!(p.relations[0].terms.len(), 2);
        assert_eq!(p.relations[0].terms[1].0, -Rat::new(1.into(), 2.into()));
    }

    #[test]
    fn parse_error_has_line() {
        let text = "quiver d\nvertices 1 2\narrows\na: 1 -> 2\nrelations\nzz*a\n";
        match parse_presentation(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn dot_is_deterministic() {
        let q = three_cycle();
        let rel = Relation::zero_relation(q.path_named(&["b", "a"]).unwrap()).unwrap();
        let p = Presentation::new(q, vec![rel]);
        let d1 = to_dot(&p);
        assert_eq!(d1, to_dot(&p));
        assert!(d1.contains("digraph"));
        assert!(d1.contains("style=dashed"));
    }
}
