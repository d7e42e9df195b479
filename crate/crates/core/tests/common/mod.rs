#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use splay_deque::compression::{CompressionKind, GeneralTree, HalvingOptions, NodeClass};
use splay_deque::splay::NodeId;

/// Random ordered tree on ids `1..=n`, node 1 the root. About a
/// third of the internal nodes are fluff.
pub fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> GeneralTree {
    let parent: Vec<usize> = (0..n)
        .map(|i| if i == 0 { 0 } else { rng.gen_range(0..i) })
        .collect();
    let mut has_child = vec![false; n];
    for &p in &parent[1..] {
        has_child[p] = true;
    }
    let mut t = GeneralTree::new();
    for i in 0..n {
        let class = if has_child[i] && rng.gen_bool(0.33) {
            NodeClass::Fluff
        } else {
            NodeClass::Essential
        };
        let id = NodeId(i as i64 + 1);
        if i == 0 {
            t.add_root(id, class);
        } else {
            t.attach_last(id, NodeId(parent[i] as i64 + 1), class);
        }
    }
    t
}

/// A bottom-up spinal path of at least `min_len` nodes, if one exists.
pub fn random_spinal_path(
    t: &GeneralTree,
    min_len: usize,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<NodeId>> {
    let nodes = t.postorder();
    for _ in 0..32 {
        let top = nodes[rng.gen_range(0..nodes.len())];
        let mut down = vec![top];
        while let Some(c) = t.leftmost_child(*down.last().unwrap()) {
            down.push(c);
        }
        if down.len() < min_len {
            continue;
        }
        let len = rng.gen_range(min_len..=down.len());
        let start = rng.gen_range(0..=down.len() - len);
        let mut path = down[start..start + len].to_vec();
        path.reverse();
        return Some(path);
    }
    None
}

/// Applies one random spinal compression and checks it. Returns a
/// description of the first failure.
pub fn compression_case(seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(3..40);
    let mut t = random_tree(n, &mut rng);
    let kind = if rng.gen_bool(0.5) {
        CompressionKind::Halving
    } else {
        CompressionKind::Total
    };
    let Some(path) = random_spinal_path(&t, 3, &mut rng) else {
        return Ok(());
    };
    let before = t.postorder_of(NodeClass::Essential);
    let depth_before: Vec<(NodeId, usize)> =
        t.postorder().into_iter().map(|v| (v, t.depth(v))).collect();
    let rec = match kind {
        CompressionKind::Halving => t.halving_compress(&path, HalvingOptions::default()),
        CompressionKind::Total => t.total_compress(&path),
    }
    .map_err(|e| format!("seed {seed}: {e}"))?;
    t.validate().map_err(|e| format!("seed {seed}: {e}"))?;
    if t.postorder_of(NodeClass::Essential) != before {
        return Err(format!("seed {seed}: essential postorder changed"));
    }
    for (v, d) in depth_before {
        if t.contains(v) && t.depth(v) > d {
            return Err(format!("seed {seed}: {v} got deeper"));
        }
    }
    let k = path.len();
    let top = path[k - 1];
    for i in 0..k - 2 {
        // emptied fluff is swept
        if !t.contains(path[i]) {
            continue;
        }
        let want = match kind {
            CompressionKind::Halving if i % 2 == 0 => Some(path[i + 2]),
            CompressionKind::Halving => continue,
            CompressionKind::Total => Some(top),
        };
        if t.parent(path[i]) != want {
            return Err(format!(
                "seed {seed}: parent of {} is {:?}",
                path[i],
                t.parent(path[i])
            ));
        }
    }
    let expected_len = match kind {
        CompressionKind::Halving => (k - 1) / 2,
        CompressionKind::Total => k - 2,
    };
    if rec.length != expected_len {
        return Err(format!("seed {seed}: length {} for {k} nodes", rec.length));
    }
    if rec.stunted != t.parent(top).is_some() {
        return Err(format!("seed {seed}: stunted flag wrong"));
    }
    Ok(())
}
