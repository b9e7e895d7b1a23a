//! Graph ingestion: JSON files, edge-list files and built-in generators.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use swk_core::graph::{
    caterpillar, complete, path, path_like, random_block_graph, star, star_like, windmill,
};
use swk_core::Graph;

#[derive(Debug, Serialize, Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    Json,
    Edges,
}

/// Parses a comma separated list of non-negative integers.
pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .with_context(|| format!("bad integer {p:?} in {s:?}"))
        })
        .collect()
}

/// A file path, or a generator such as `path:5`, `windmill:3,2`,
/// `path-like:3,2,4`, `star-like:3,2`, `caterpillar:3,2`, `complete:4`,
/// `star:5` or `random:9,4` (order and block bounds, drawn with `seed`).
pub fn load_graph(source: &str, seed: u64) -> Result<Graph> {
    if let Some((kind, args)) = source.split_once(':') {
        if !Path::new(source).exists() {
            return generate(kind, args, seed).with_context(|| format!("generator {source:?}"));
        }
    }
    let text = fs::read_to_string(source).with_context(|| format!("cannot read {source}"))?;
    parse_graph(&text).with_context(|| format!("cannot parse {source}"))
}

fn generate(kind: &str, args: &str, seed: u64) -> Result<Graph> {
    let nums = parse_list(args)?;
    let one = || -> Result<usize> {
        match nums.as_slice() {
            [n] => Ok(*n),
            _ => bail!("{kind} takes one number"),
        }
    };
    Ok(match kind {
        "path" => path(one()?),
        "star" => star(one()?),
        "complete" => complete(one()?),
        "windmill" => match nums.as_slice() {
            [r, t] => windmill(*r, *t)?,
            _ => bail!("windmill takes r,t"),
        },
        "path-like" => path_like(&nums)?,
        "star-like" => star_like(&nums)?,
        "caterpillar" => caterpillar(&nums)?,
        "random" => {
            let (order, block) = match nums.as_slice() {
                [n] => (*n, 4),
                [n, b] => (*n, *b),
                _ => bail!("random takes max_order[,max_block]"),
            };
            random_block_graph(&mut ChaCha8Rng::seed_from_u64(seed), order, block)?
        }
        other => bail!("unknown generator {other:?}"),
    })
}

/// JSON when the text starts with `{`, otherwise an edge list: a line `n m`
/// followed by `m` lines `u v`. Blank lines and `#` comments are skipped.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        let f: GraphFile = serde_json::from_str(text)?;
        let edges: Vec<(usize, usize)> = f.edges.iter().map(|e| (e[0], e[1])).collect();
        return Ok(Graph::new(f.n, &edges)?);
    }
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .enumerate()
        .filter(|(_, l)| !l.is_empty());
    let pair = |(no, line): (usize, &str)| -> Result<(usize, usize)> {
        let parts: Vec<&str> = line.split_whitespace().collect();
        match parts.as_slice() {
            [a, b] => Ok((
                a.parse().with_context(|| format!("line {}", no + 1))?,
                b.parse().with_context(|| format!("line {}", no + 1))?,
            )),
            _ => bail!("line {}: expected two integers, got {line:?}", no + 1),
        }
    };
    let (n, m) = pair(lines.next().context("empty edge list")?)?;
    let edges = lines.map(pair).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        bail!("header announces {m} edges, found {}", edges.len());
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn render_graph(g: &Graph, format: GraphFormat) -> Result<String> {
    Ok(match format {
        GraphFormat::Json => {
            let f = GraphFile {
                n: g.order(),
                edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            };
            serde_json::to_string(&f)? + "\n"
        }
        GraphFormat::Edges => {
            let mut out = format!("{} {}\n", g.order(), g.size());
            for (u, v) in g.edges() {
                out.push_str(&format!("{u} {v}\n"));
            }
            out
        }
    })
}
