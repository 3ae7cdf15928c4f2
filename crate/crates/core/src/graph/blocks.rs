use std::collections::BTreeSet;

use super::Graph;

/// Blocks (maximal 2-connected vertex sets, bridges, isolated vertices) and
/// their incidence with cut vertices.
///
/// Blocks are stored with sorted members and are themselves ordered
/// lexicographically, so the decomposition of a graph is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutTree {
    blocks: Vec<Vec<usize>>,
    is_cut: Vec<bool>,
    vertex_blocks: Vec<Vec<usize>>,
}

impl BlockCutTree {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, b: usize) -> &[usize] {
        &self.blocks[b]
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_cut(&self, v: usize) -> bool {
        self.is_cut[v]
    }

    pub fn cut_vertices(&self) -> Vec<usize> {
        (0..self.is_cut.len()).filter(|&v| self.is_cut[v]).collect()
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_of(&self, v: usize) -> &[usize] {
        &self.vertex_blocks[v]
    }

    /// Cut vertices of block `b`.
    pub fn cuts_in(&self, b: usize) -> impl Iterator<Item = usize> + '_ {
        self.blocks[b].iter().copied().filter(|&v| self.is_cut[v])
    }

    /// Bipartite tree edges `(block index, cut vertex)`.
    pub fn incidence(&self) -> Vec<(usize, usize)> {
        (0..self.blocks.len()).flat_map(|b| self.cuts_in(b).map(move |c| (b, c))).collect()
    }

    /// Largest block size (0 for the empty graph).
    pub fn max_block_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Tarjan's biconnected components, run from every unvisited vertex so that
/// disconnected inputs yield a block forest.
pub fn block_decomposition(g: &Graph) -> BlockCutTree {
    let n = g.n();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    // (vertex, parent, next neighbor position)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = timer;
            timer += 1;
            blocks.push(vec![root]);
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, UNSEEN, 0));
        while let Some(&mut (u, parent, ref mut pos)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(u).get(*pos) {
                *pos += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == UNSEEN {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    edge_stack.push((u, w));
                    stack.push((w, u, 0));
                } else if disc[w] < disc[u] {
                    low[u] = low[u].min(disc[w]);
                    edge_stack.push((u, w));
                }
            } else {
                stack.pop();
                if parent != UNSEEN {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] >= disc[parent] {
                        let mut members = BTreeSet::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            members.insert(a);
                            members.insert(b);
                            if (a, b) == (parent, u) {
                                break;
                            }
                        }
                        blocks.push(members.into_iter().collect());
                    }
                }
            }
        }
    }

    blocks.sort();
    let mut vertex_blocks = vec![Vec::new(); n];
    for (b, members) in blocks.iter().enumerate() {
        for &v in members {
            vertex_blocks[v].push(b);
        }
    }
    let is_cut = vertex_blocks.iter().map(|bs| bs.len() >= 2).collect();
    BlockCutTree { blocks, is_cut, vertex_blocks }
}

/// Every block induces a complete subgraph.
pub fn is_block_graph(g: &Graph) -> bool {
    block_decomposition(g).blocks.iter().all(|b| g.is_clique(b))
}

/// Returns `(simplicial, cut)` vertex sets: vertices in exactly one block and
/// vertices in two or more.
pub fn classify_vertices(g: &Graph, bct: &BlockCutTree) -> (Vec<usize>, Vec<usize>) {
    (0..g.n()).partition(|&v| bct.vertex_blocks[v].len() == 1)
}

/// Returns `(pendant, internal)` block indices. A pendant block holds exactly
/// one cut vertex; an internal block consists of cut vertices only. A block
/// without cut vertices is neither.
pub fn classify_blocks(bct: &BlockCutTree) -> (Vec<usize>, Vec<usize>) {
    let mut pendant = Vec::new();
    let mut internal = Vec::new();
    for (b, members) in bct.blocks.iter().enumerate() {
        let cuts = bct.cuts_in(b).count();
        if cuts == 1 {
            pendant.push(b);
        }
        if cuts > 0 && cuts == members.len() {
            internal.push(b);
        }
    }
    (pendant, internal)
}
