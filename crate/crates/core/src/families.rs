//! Constructors for the named graph families, the corona and join products,
//! and the family description strings used on the command line
//! (`cycle:9`, `kmn:2,3`, `corona(path:3,complete:1)`, ...).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Edgeless graph on `n` vertices.
pub fn empty(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Input("path needs at least one vertex".into()));
    }
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges)
}

/// Cycle with vertex `i` adjacent to `i ± 1 (mod n)`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Input(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// `K_{m,n}` with parts `X = 0..m` and `Y = m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::Input(format!(
            "complete bipartite graph needs nonempty parts, got ({m}, {n})"
        )));
    }
    let mut edges = Vec::with_capacity(m * n);
    for u in 0..m {
        for v in m..m + n {
            edges.push((u, v));
        }
    }
    Graph::new(m + n, &edges)
}

/// The two parts of [`complete_bipartite`]`(m, n)`.
pub fn bipartite_parts(m: usize, n: usize) -> (std::ops::Range<usize>, std::ops::Range<usize>) {
    (0..m, m..m + n)
}

/// Friendship graph `F_n`: center `0`, triangles `{0, 2i-1, 2i}` for `1 <= i <= n`.
pub fn friendship(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Input("friendship graph needs at least one triangle".into()));
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 1..=n {
        edges.extend([(0, 2 * i - 1), (0, 2 * i), (2 * i - 1, 2 * i)]);
    }
    Graph::new(2 * n + 1, &edges)
}

/// Triangular cactus chain `T_n`.
///
/// Top vertices are `0..n`, the bottom path is `n..=2n`, and top vertex `i`
/// closes a triangle with bottom vertices `n+i` and `n+i+1`. Shifted by one,
/// these are the labels `1..n` (top) and `n+1..2n+1` (bottom) of the usual
/// drawing.
pub fn triangular_cactus(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Input("triangular cactus needs at least one triangle".into()));
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((n + i, n + i + 1));
        edges.push((i, n + i));
        edges.push((i, n + i + 1));
    }
    Graph::new(2 * n + 1, &edges)
}

/// Corona `g ∘ h`: vertices of `g` keep their labels, the `i`-th copy of `h`
/// occupies `|g| + i|h| .. |g| + (i+1)|h|` and is fully joined to vertex `i`.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    let (gn, hn) = (g.order(), h.order());
    if gn == 0 || hn == 0 {
        return Err(Error::Input("corona operands must be nonempty".into()));
    }
    let total = gn + gn * hn;
    if total > MAX_VERTICES {
        return Err(Error::Capacity {
            n: total,
            cap: MAX_VERTICES,
        });
    }
    let mut edges = g.edges();
    let h_edges = h.edges();
    for i in 0..gn {
        let base = gn + i * hn;
        edges.extend(h_edges.iter().map(|&(u, v)| (base + u, base + v)));
        edges.extend((0..hn).map(|u| (i, base + u)));
    }
    Graph::new(total, &edges)
}

/// Join `g ∨ h`: `g` on `0..|g|`, `h` shifted by `|g|`, plus every cross edge.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let (gn, hn) = (g.order(), h.order());
    if gn == 0 || hn == 0 {
        return Err(Error::Input("join operands must be nonempty".into()));
    }
    if gn + hn > MAX_VERTICES {
        return Err(Error::Capacity {
            n: gn + hn,
            cap: MAX_VERTICES,
        });
    }
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(u, v)| (gn + u, gn + v)));
    for u in 0..gn {
        edges.extend((0..hn).map(|v| (u, gn + v)));
    }
    Graph::new(gn + hn, &edges)
}

/// A named family instance, parsed from or rendered to the DSL.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Empty(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Path(usize),
    Cycle(usize),
    Friendship(usize),
    TriangularCactus(usize),
    Corona(Box<FamilySpec>, Box<FamilySpec>),
    Join(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Empty(n) => empty(*n),
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::CompleteBipartite(m, n) => complete_bipartite(*m, *n),
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Friendship(n) => friendship(*n),
            FamilySpec::TriangularCactus(n) => triangular_cactus(*n),
            FamilySpec::Corona(g, h) => corona(&g.build()?, &h.build()?),
            FamilySpec::Join(g, h) => join(&g.build()?, &h.build()?),
        }
    }

    /// Vertex count without building the graph (products may exceed 64).
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Empty(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Path(n)
            | FamilySpec::Cycle(n) => *n,
            FamilySpec::CompleteBipartite(m, n) => m + n,
            FamilySpec::Friendship(n) | FamilySpec::TriangularCactus(n) => 2 * n + 1,
            FamilySpec::Corona(g, h) => g.order() * (1 + h.order()),
            FamilySpec::Join(g, h) => g.order() + h.order(),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(m, n) if m == n => write!(f, "knn:{n}"),
            FamilySpec::CompleteBipartite(m, n) => write!(f, "kmn:{m},{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Friendship(n) => write!(f, "friendship:{n}"),
            FamilySpec::TriangularCactus(n) => write!(f, "cactus:{n}"),
            FamilySpec::Corona(g, h) => write!(f, "corona({g},{h})"),
            FamilySpec::Join(g, h) => write!(f, "join({g},{h})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let s = s.trim();
        let bad = |msg: String| Error::Parse { line: 1, msg };

        for (prefix, is_corona) in [("corona(", true), ("join(", false)] {
            if let Some(rest) = s.strip_prefix(prefix) {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| bad(format!("missing closing parenthesis in `{s}`")))?;
                let split = top_level_comma(inner)
                    .ok_or_else(|| bad(format!("expected two operands in `{s}`")))?;
                let g: FamilySpec = inner[..split].parse()?;
                let h: FamilySpec = inner[split + 1..].parse()?;
                return Ok(if is_corona {
                    FamilySpec::Corona(Box::new(g), Box::new(h))
                } else {
                    FamilySpec::Join(Box::new(g), Box::new(h))
                });
            }
        }

        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| bad(format!("expected `<family>:<params>`, got `{s}`")))?;
        let params = args
            .split(',')
            .map(|a| {
                a.trim()
                    .parse::<usize>()
                    .map_err(|_| bad(format!("invalid parameter `{a}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let one = || match params.as_slice() {
            [n] => Ok(*n),
            _ => Err(bad(format!("`{name}` takes one parameter"))),
        };
        Ok(match name.trim() {
            "empty" => FamilySpec::Empty(one()?),
            "complete" => FamilySpec::Complete(one()?),
            "knn" => {
                let n = one()?;
                FamilySpec::CompleteBipartite(n, n)
            }
            "kmn" => match params.as_slice() {
                [m, n] => FamilySpec::CompleteBipartite(*m, *n),
                _ => return Err(bad("`kmn` takes two parameters".into())),
            },
            "path" => FamilySpec::Path(one()?),
            "cycle" => FamilySpec::Cycle(one()?),
            "friendship" => FamilySpec::Friendship(one()?),
            "cactus" => FamilySpec::TriangularCactus(one()?),
            other => return Err(bad(format!("unknown family `{other}`"))),
        })
    }
}

fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            // `kmn:2,3` contains a comma of its own; only split where the
            // left side is a complete spec.
            ',' if depth == 0 && s[..i].parse::<FamilySpec>().is_ok() => return Some(i),
            _ => {}
        }
    }
    None
}
