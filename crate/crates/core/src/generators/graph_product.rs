use std::collections::{BTreeSet, HashMap};

use crate::ball::LabeledBall;
use crate::cliques::all_cliques;
use crate::cubical::CubeComplex;
use crate::simplicial::SimplicialComplex;

use super::words::{Letter, NormalWord};
use super::GeneratorError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Two,
    Infinite,
}

/// Generators with orders two or infinity and a commutation graph. All order two
/// gives a right-angled Coxeter group, all infinite a right-angled Artin group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductGraph {
    names: Vec<String>,
    orders: Vec<Order>,
    adj: Vec<BTreeSet<usize>>,
}

impl ProductGraph {
    /// Generators are reindexed in name order, which is also the letter order of
    /// normal forms.
    pub fn new(gens: Vec<(String, Order)>, edges: &[(String, String)]) -> Result<Self, GeneratorError> {
        let mut gens = gens;
        gens.sort_by(|a, b| a.0.cmp(&b.0));
        if let Some(w) = gens.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(GeneratorError::DuplicateGenerator(w[0].0.clone()));
        }
        let (names, orders): (Vec<String>, Vec<Order>) = gens.into_iter().unzip();
        let mut g = ProductGraph { adj: vec![BTreeSet::new(); names.len()], names, orders };
        for (a, b) in edges {
            let ia = g.index(a).ok_or_else(|| GeneratorError::UnknownGenerator(a.clone()))?;
            let ib = g.index(b).ok_or_else(|| GeneratorError::UnknownGenerator(b.clone()))?;
            if ia == ib {
                return Err(GeneratorError::SelfLoop(a.clone()));
            }
            g.adj[ia].insert(ib);
            g.adj[ib].insert(ia);
        }
        Ok(g)
    }

    /// Lines `gen a order=2|inf` and `edge a b`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, GeneratorError> {
        let mut gens = Vec::new();
        let mut edges = Vec::new();
        let mut edge_lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            let err = |message: String| GeneratorError::Parse { line: i + 1, message };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [] => {}
                ["gen", name, order] => {
                    let order = match *order {
                        "order=2" => Order::Two,
                        "order=inf" => Order::Infinite,
                        other => return Err(err(format!("unsupported order `{other}`"))),
                    };
                    gens.push((name.to_string(), order));
                }
                ["edge", a, b] => {
                    edges.push((a.to_string(), b.to_string()));
                    edge_lines.push(i + 1);
                }
                _ => return Err(err(format!("expected `gen NAME order=2|inf` or `edge A B`, found `{line}`"))),
            }
        }
        ProductGraph::new(gens.clone(), &edges).map_err(|e| match e {
            GeneratorError::UnknownGenerator(_) | GeneratorError::SelfLoop(_) => {
                let line = edges
                    .iter()
                    .zip(&edge_lines)
                    .find(|((a, b), _)| {
                        a == b || !gens.iter().any(|g| &g.0 == a) || !gens.iter().any(|g| &g.0 == b)
                    })
                    .map_or(0, |(_, &l)| l);
                GeneratorError::Parse { line, message: e.to_string() }
            }
            other => other,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (n, o) in self.names.iter().zip(&self.orders) {
            let o = match o {
                Order::Two => "2",
                Order::Infinite => "inf",
            };
            out.push_str(&format!("gen {n} order={o}\n"));
        }
        for (a, nbrs) in self.adj.iter().enumerate() {
            for &b in nbrs.range(a + 1..) {
                out.push_str(&format!("edge {} {}\n", self.names[a], self.names[b]));
            }
        }
        out
    }

    /// The right-angled Coxeter group whose nerve is the given flag complex.
    pub fn racg_from_nerve(nerve: &SimplicialComplex) -> Self {
        let gens = nerve.vertices().iter().map(|v| (v.clone(), Order::Two)).collect();
        let edges: Vec<(String, String)> = nerve.edges().into_iter().collect();
        ProductGraph::new(gens, &edges).expect("nerve edges join nerve vertices")
    }

    /// Same commutation graph with every generator of the given order.
    pub fn with_order(&self, order: Order) -> Self {
        ProductGraph { orders: vec![order; self.names.len()], ..self.clone() }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub fn order(&self, g: usize) -> Order {
        self.orders[g]
    }

    pub fn is_involution(&self, g: usize) -> bool {
        self.orders[g] == Order::Two
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    /// The flag complex of the commutation graph.
    pub fn clique_complex(&self) -> SimplicialComplex {
        let edges: Vec<(String, String)> = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(a, n)| n.range(a + 1..).map(move |&b| (a, b)))
            .map(|(a, b)| (self.names[a].clone(), self.names[b].clone()))
            .collect();
        SimplicialComplex::clique_complex(self.names.iter().cloned(), &edges)
    }

    pub fn max_clique_size(&self) -> usize {
        all_cliques(&self.adj).iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Every letter: `s` for each generator and also `s⁻¹` for infinite ones.
    pub fn letters(&self) -> Vec<Letter> {
        (0..self.len())
            .flat_map(|g| {
                let inv = (!self.is_involution(g)).then(|| Letter::new(g, true));
                std::iter::once(Letter::new(g, false)).chain(inv)
            })
            .collect()
    }
}

/// Ball of radius `radius` about the identity in the cube complex of the graph
/// product: the Davis complex for order-two generators, the universal cover of
/// the Salvetti complex for infinite ones. Every vertex lies in one orbit `e`.
///
/// A cube is built from its corner `g` nearest the identity: a clique of
/// commuting letters each of which lengthens `g`.
pub fn graph_product_ball(graph: &ProductGraph, radius: usize) -> Result<LabeledBall, GeneratorError> {
    let letters = graph.letters();
    let mut words = vec![NormalWord::identity()];
    let mut index: HashMap<NormalWord, usize> = HashMap::from([(NormalWord::identity(), 0)]);
    // up[v][s] = v·s when that is one step further from the identity
    let mut up: Vec<HashMap<Letter, usize>> = vec![HashMap::new()];
    let mut level = vec![0];
    for depth in 0..radius {
        let mut next = Vec::new();
        for &v in &level {
            for &s in &letters {
                let w = words[v].times(s, graph);
                if w.len() != depth + 1 {
                    continue;
                }
                let id = *index.entry(w.clone()).or_insert_with(|| {
                    words.push(w);
                    up.push(HashMap::new());
                    next.push(words.len() - 1);
                    words.len() - 1
                });
                up[v].insert(s, id);
            }
        }
        level = next;
    }

    let mut choices: Vec<Vec<Letter>> = Vec::new();
    for clique in all_cliques(&graph.adj).into_iter().filter(|c| !c.is_empty()) {
        let mut partial: Vec<Vec<Letter>> = vec![Vec::new()];
        for &g in &clique {
            let options: Vec<Letter> = letters.iter().copied().filter(|l| l.gen == g).collect();
            partial = partial
                .into_iter()
                .flat_map(|p| options.iter().map(move |&l| [p.clone(), vec![l]].concat()))
                .collect();
        }
        choices.extend(partial);
    }
    let mut cubes = Vec::new();
    for v in 0..words.len() {
        'choice: for axes in &choices {
            let mut corners = Vec::with_capacity(1 << axes.len());
            for mask in 0usize..1 << axes.len() {
                let mut at = v;
                for (bit, s) in axes.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        match up[at].get(s) {
                            Some(&w) => at = w,
                            None => continue 'choice,
                        }
                    }
                }
                corners.push(at);
            }
            cubes.push(corners);
        }
    }

    let names: Vec<String> = words.iter().map(|w| w.render(graph)).collect();
    let n = names.len();
    let complex = CubeComplex::from_indexed(names, cubes)?;
    let base = complex.vertex("()")?;
    let dim = graph.max_clique_size();
    Ok(LabeledBall::new(complex, base, radius, dim, vec!["e".to_string(); n], false, None)?)
}
