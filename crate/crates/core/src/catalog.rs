//! Named graphs and parametric families, each with the properties it is
//! known to have.
//!
//! Named drawings are transcribed vertex by vertex; the letters used in the
//! drawings map to ids in alphabetical order (`a = 0`, `b = 1`, ...).

use serde::{Deserialize, Serialize};

use crate::connectivity::{edge_connectivity, independence_number};
use crate::error::{domain, Error, Result};
use crate::graph::{Multigraph, VertexId};
use crate::orientation::{has_mod3_orientation, is_z3_connected};
use crate::reduction::is_z3_reduced;

pub fn complete(n: usize) -> Multigraph {
    let mut pairs = Vec::new();
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            pairs.push((a, b));
        }
    }
    Multigraph::from_edges(n, &pairs).expect("complete graphs are loopless")
}

/// `C_n` for `n >= 2`; `C_2` is a digon.
pub fn cycle(n: usize) -> Multigraph {
    assert!(n >= 2, "cycles need at least two vertices");
    let pairs: Vec<(u32, u32)> = (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect();
    Multigraph::from_edges(n, &pairs).expect("cycles are loopless")
}

/// `W_n`: rim `0..n` in cyclic order and centre `n`.
pub fn wheel(n: usize) -> Multigraph {
    let mut g = cycle(n);
    let c = g.add_vertex();
    for i in 0..n as u32 {
        g.add_edge(c, VertexId(i)).expect("spokes are loopless");
    }
    g
}

pub fn complete_bipartite(p: usize, q: usize) -> Multigraph {
    let mut pairs = Vec::new();
    for a in 0..p as u32 {
        for b in 0..q as u32 {
            pairs.push((a, p as u32 + b));
        }
    }
    Multigraph::from_edges(p + q, &pairs).expect("bipartite graphs are loopless")
}

fn lettered(n: usize, edges: &str) -> Multigraph {
    let idx = |c: u8| (c - b'a') as u32;
    let pairs: Vec<(u32, u32)> = edges
        .split_whitespace()
        .map(|p| {
            let b = p.as_bytes();
            (idx(b[0]), idx(b[1]))
        })
        .collect();
    Multigraph::from_edges(n, &pairs).expect("transcriptions are loopless")
}

/// Two copies of `K_4` sharing the edge `ad`; `a` and `d` have degree 5.
pub fn g3() -> Multigraph {
    lettered(6, "ad ab ac bc dc bd ae af ed df ef")
}

/// `G^3` without the shared edge `ad`.
pub fn g4() -> Multigraph {
    lettered(6, "ab ac bc dc bd ae af ed df ef")
}

/// The 5-wheel: rim `a b c e d`, centre `f`.
pub fn g5() -> Multigraph {
    lettered(6, "ab bc ce ed da fa fb fc fd fe")
}

/// Two copies of `K_4` sharing the vertex `d`, plus the edge `ae`.
pub fn g10() -> Multigraph {
    lettered(7, "ab ac ad bc bd cd ae ed ef gf eg dg df")
}

/// Two copies of `K_4` sharing the vertex `d`.
pub fn g11() -> Multigraph {
    lettered(7, "ab ac ad bc bd cd ed ef gf eg dg df")
}

/// `K_4` on `{a, d, e, f}` and `K_4` on `{b, c, g, h}` joined by the
/// 4-cycle `a b f c`.
pub fn g18() -> Multigraph {
    lettered(8, "da ab bg ef fc ch de gh df ea af ac bc bf gc bh")
}

/// Graph `i` (1-based) of the twelve exceptional graphs under the Ore
/// condition.
pub fn ore_exception(i: usize) -> Option<Multigraph> {
    Some(match i {
        1 => lettered(6, "ad ab ac bc bf bd ec af ed ef"),
        2 => g3(),
        3 => g5(),
        // triangular prism: triangles abe, cdf matched by ac, bd, ef
        4 => lettered(6, "ab be ea cd df fc ac bd ef"),
        5 => complete(4),
        // K_4 on abcd without ab, plus the path a e b
        6 => lettered(5, "ac ad bc bd cd ae eb"),
        7 => complete_bipartite(3, 3),
        8 => g4(),
        // K_5 without ab and ac
        9 => lettered(5, "ad ae bc bd be cd ce de"),
        10 => lettered(4, "ab ac bc bd cd"),
        11 => cycle(4),
        12 => cycle(3),
        _ => return None,
    })
}

/// Simple, at least three vertices, and `d(u) + d(v) >= n` for every
/// nonadjacent pair.
pub fn satisfies_ore(g: &Multigraph) -> bool {
    if !g.is_simple() || g.order() < 3 {
        return false;
    }
    let d = g.dense();
    (0..d.n).all(|a| (a + 1..d.n).all(|b| d.mult(a, b) > 0 || (d.deg[a] + d.deg[b]) as usize >= d.n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Order,
    Size,
    HasMod3,
    Z3Connected,
    Z3Reduced,
    EdgeConnectivity,
    IndependenceNumber,
    OreCondition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub property: Property,
    pub expected: Value,
}

fn flag(property: Property, v: bool) -> Claim {
    Claim { property, expected: Value::Bool(v) }
}

fn int(property: Property, v: u64) -> Claim {
    Claim { property, expected: Value::Int(v) }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    #[serde(with = "crate::io::json_graph")]
    pub graph: Multigraph,
    pub claims: Vec<Claim>,
}

/// Named graphs (without the parametric families).
pub const NAMES: [&str; 18] = [
    "G3", "G4", "G5", "G10", "G11", "G18", "FZ-1", "FZ-2", "FZ-3", "FZ-4", "FZ-5", "FZ-6", "FZ-7", "FZ-8", "FZ-9",
    "FZ-10", "FZ-11", "FZ-12",
];

/// Parametric families, used as `get("K", Some(5))` or `get("K5", None)`.
pub const FAMILIES: [&str; 3] = ["K", "C", "W"];

/// Names that exist but carry no adjacency data.
pub const UNTRANSCRIBED: [&str; 1] = ["special-8"];

fn entry(name: &str, description: &str, graph: Multigraph, claims: Vec<Claim>) -> CatalogEntry {
    CatalogEntry { name: name.to_string(), description: description.to_string(), graph, claims }
}

fn family(name: &str, param: usize) -> Result<CatalogEntry> {
    use Property::*;
    match name {
        "K" => {
            let mut claims = vec![int(Order, param as u64), int(Size, (param * param.saturating_sub(1) / 2) as u64)];
            claims.push(flag(Z3Connected, param == 1 || param >= 5));
            claims.push(flag(HasMod3, param != 2 && param != 4));
            Ok(entry(&format!("K{param}"), "complete graph", complete(param), claims))
        }
        "C" if param >= 2 => Ok(entry(
            &format!("C{param}"),
            "cycle (C2 is a digon)",
            cycle(param),
            vec![int(Order, param as u64), int(Size, param as u64), flag(HasMod3, true), flag(Z3Connected, param == 2)],
        )),
        "W" if param >= 2 => {
            let mut claims = vec![int(Order, param as u64 + 1), int(Size, 2 * param as u64)];
            if param.is_multiple_of(2) {
                claims.push(flag(Z3Connected, true));
            } else if param >= 3 {
                claims.push(flag(Z3Connected, false));
            }
            Ok(entry(&format!("W{param}"), "wheel (rim 0..n, centre n)", wheel(param), claims))
        }
        "C" | "W" => domain(format!("{name}_n needs n >= 2")),
        _ => Err(Error::Lookup(name.to_string())),
    }
}

fn split_family(name: &str) -> Option<(&str, usize)> {
    if name.is_empty() || !name.is_char_boundary(1) {
        return None;
    }
    let (head, tail) = name.split_at(1);
    let tail = tail.strip_prefix('_').unwrap_or(tail);
    if !FAMILIES.contains(&head) || tail.is_empty() {
        return None;
    }
    tail.parse().ok().map(|n| (head, n))
}

/// A fresh copy of the named graph with its claims. Families take their
/// parameter either from `param` or from the name itself (`"W4"`, `"K_5"`).
pub fn get(name: &str, param: Option<usize>) -> Result<CatalogEntry> {
    use Property::*;
    if FAMILIES.contains(&name) {
        let Some(n) = param else {
            return domain(format!("family {name} needs a parameter"));
        };
        return family(name, n);
    }
    if let Some((head, n)) = split_family(name) {
        return family(head, n);
    }
    if UNTRANSCRIBED.contains(&name) {
        return Err(Error::Lookup(format!(
            "{name}: the eighteen special graphs of order at most 8 are not depicted, so no adjacency is available"
        )));
    }
    Ok(match name {
        "G3" => entry(
            name,
            "two K4 sharing an edge",
            g3(),
            vec![
                int(Order, 6),
                int(Size, 11),
                flag(HasMod3, false),
                flag(Z3Connected, false),
                flag(Z3Reduced, true),
                int(EdgeConnectivity, 3),
                int(IndependenceNumber, 2),
            ],
        ),
        "G4" => entry(name, "G3 without the shared edge", g4(), vec![int(Size, 10), flag(Z3Connected, false)]),
        "G5" => entry(name, "the 5-wheel", g5(), vec![int(Order, 6), int(Size, 10), flag(HasMod3, false)]),
        "G10" => {
            entry(name, "two K4 sharing a vertex, plus one edge", g10(), vec![int(Size, 13), flag(Z3Connected, false)])
        }
        "G11" => entry(name, "two K4 sharing a vertex", g11(), vec![int(Size, 12), flag(Z3Connected, false)]),
        "G18" => {
            entry(name, "two K4 joined by a 4-cycle", g18(), vec![int(Order, 8), int(Size, 16), flag(HasMod3, false)])
        }
        _ => {
            let i: usize =
                name.strip_prefix("FZ-").and_then(|s| s.parse().ok()).ok_or_else(|| Error::Lookup(name.to_string()))?;
            let graph = ore_exception(i).ok_or_else(|| Error::Lookup(name.to_string()))?;
            let mut claims = vec![flag(OreCondition, true), flag(HasMod3, i > 6), flag(Z3Connected, false)];
            if i == 9 {
                claims.push(int(Size, 8));
                claims.push(flag(Z3Reduced, true));
            }
            entry(name, "exception under the Ore condition", graph, claims)
        }
    })
}

/// Every named entry plus small members of each family.
pub fn list() -> Vec<String> {
    let mut out: Vec<String> = NAMES.iter().map(|s| s.to_string()).collect();
    out.extend(FAMILIES.iter().map(|f| format!("{f}_n")));
    out.extend(UNTRANSCRIBED.iter().map(|s| format!("{s} (not transcribed)")));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCheck {
    pub property: Property,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub name: String,
    pub checks: Vec<ClaimCheck>,
    pub pass: bool,
}

pub fn evaluate(g: &Multigraph, property: Property) -> Result<Value> {
    Ok(match property {
        Property::Order => Value::Int(g.order() as u64),
        Property::Size => Value::Int(g.size() as u64),
        Property::HasMod3 => Value::Bool(has_mod3_orientation(g)),
        Property::Z3Connected => Value::Bool(is_z3_connected(g)?),
        Property::Z3Reduced => Value::Bool(is_z3_reduced(g)?),
        Property::EdgeConnectivity => Value::Int(edge_connectivity(g)?.cut_size),
        Property::IndependenceNumber => Value::Int(independence_number(g)?.0 as u64),
        Property::OreCondition => Value::Bool(satisfies_ore(g)),
    })
}

pub fn verify_entry(entry: &CatalogEntry) -> Result<ClaimReport> {
    let checks = entry
        .claims
        .iter()
        .map(|c| {
            let actual = evaluate(&entry.graph, c.property)?;
            Ok(ClaimCheck { property: c.property, expected: c.expected, actual, pass: actual == c.expected })
        })
        .collect::<Result<Vec<_>>>()?;
    let pass = checks.iter().all(|c| c.pass);
    Ok(ClaimReport { name: entry.name.clone(), checks, pass })
}

pub fn verify_claims(name: &str) -> Result<ClaimReport> {
    verify_entry(&get(name, None)?)
}

/// Named entries plus `K1..K6`, `C2..C6`, `W2..W8`.
pub fn verify_all() -> Result<Vec<ClaimReport>> {
    let mut names: Vec<String> = NAMES.iter().map(|s| s.to_string()).collect();
    names.extend((1..=6).map(|n| format!("K{n}")));
    names.extend((2..=6).map(|n| format!("C{n}")));
    names.extend((2..=8).map(|n| format!("W{n}")));
    let reports = crate::par::map_slice(&names, |n| verify_claims(n));
    reports.into_iter().collect()
}
