#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use swk_core::closed_forms::BlockOrderSequence;
use swk_core::extremal::enumerate_family;
use swk_core::graph::random_block_graph;
use swk_core::Graph;

pub const FAMILY_LIMIT: usize = 100_000;

/// Non-increasing block order sequences with entries in `2..=max_block`, at
/// most `max_blocks` entries and total order at most `max_order`.
pub fn block_sequences(
    max_blocks: usize,
    max_block: usize,
    max_order: usize,
) -> Vec<BlockOrderSequence> {
    fn rec(
        cap: usize,
        left: usize,
        max_blocks: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_blocks {
            return;
        }
        for b in (2..=cap.min(left + 1)).rev() {
            cur.push(b);
            rec(b, left - (b - 1), max_blocks, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(
        max_block,
        max_order - 1,
        max_blocks,
        &mut Vec::new(),
        &mut out,
    );
    out.into_iter()
        .map(|v| BlockOrderSequence::new(v).unwrap())
        .collect()
}

pub fn families(
    max_blocks: usize,
    max_block: usize,
    max_order: usize,
) -> Vec<(BlockOrderSequence, Vec<Graph>)> {
    block_sequences(max_blocks, max_block, max_order)
        .into_iter()
        .map(|s| {
            let fam = enumerate_family(&s, FAMILY_LIMIT).unwrap();
            (s, fam)
        })
        .collect()
}

pub fn random_corpus(count: usize, seed: u64, max_order: usize, max_block: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_block_graph(&mut rng, max_order, max_block).unwrap())
        .collect()
}

/// Exhaustive families with at most 4 blocks of order at most 4 and at most
/// 9 vertices, followed by 200 seeded random block graphs on at most 9
/// vertices.
pub fn corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = families(4, 4, 9).into_iter().flat_map(|(_, f)| f).collect();
    out.extend(random_corpus(200, 0x5eed, 9, 5));
    out
}
