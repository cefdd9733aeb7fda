//! Dynkin / extended Dynkin / wild classification of connected components.
//!
//! Orientation is ignored. Any loop disqualifies a component from the
//! Dynkin tables; a single vertex with exactly one loop is extended `A_0`.

use std::fmt;

use crate::quiver::{component_vertex_sets, DimVector, Quiver};

/// Simply-laced diagram type `A_n`, `D_n`, `E_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Diagram {
    A(usize),
    D(usize),
    E(usize),
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagram::A(n) => write!(f, "A{n}"),
            Diagram::D(n) => write!(f, "D{n}"),
            Diagram::E(n) => write!(f, "E{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuiverClass {
    Dynkin(Diagram),
    /// `delta` is indexed by the component's vertices in increasing order.
    ExtendedDynkin { diagram: Diagram, delta: DimVector },
    Wild,
}

impl QuiverClass {
    pub fn is_dynkin(&self) -> bool {
        matches!(self, QuiverClass::Dynkin(_))
    }

    pub fn is_extended(&self) -> bool {
        matches!(self, QuiverClass::ExtendedDynkin { .. })
    }

    pub fn delta(&self) -> Option<&DimVector> {
        match self {
            QuiverClass::ExtendedDynkin { delta, .. } => Some(delta),
            _ => None,
        }
    }
}

impl fmt::Display for QuiverClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuiverClass::Dynkin(d) => write!(f, "Dynkin {d}"),
            QuiverClass::ExtendedDynkin { diagram, delta } => {
                write!(f, "ExtendedDynkin ~{diagram} delta={delta}")
            }
            QuiverClass::Wild => write!(f, "Wild"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentClass {
    /// Vertices of the component, as indices into the classified quiver.
    pub vertices: Vec<usize>,
    pub class: QuiverClass,
}

impl ComponentClass {
    /// The imaginary root lifted to the whole quiver (zero off the component).
    pub fn delta_lifted(&self, vertex_count: usize) -> Option<DimVector> {
        let delta = self.class.delta()?;
        let mut e = vec![0; vertex_count];
        for (i, &v) in self.vertices.iter().enumerate() {
            e[v] = delta.get(i);
        }
        Some(DimVector::new(e))
    }
}

/// Classifies every connected component of `q`.
pub fn classify(q: &Quiver) -> Vec<ComponentClass> {
    component_vertex_sets(q)
        .into_iter()
        .map(|vs| {
            let class = classify_connected(&q.induced(&vs));
            ComponentClass { vertices: vs, class }
        })
        .collect()
}

/// Classifies a connected quiver.
pub fn classify_connected(q: &Quiver) -> QuiverClass {
    let n = q.vertex_count();
    let ones = || DimVector::new(vec![1; n]);
    if n == 0 {
        return QuiverClass::Wild;
    }
    let loops: usize = (0..n).map(|v| q.loops_at(v)).sum();
    if n == 1 {
        return match loops {
            0 => QuiverClass::Dynkin(Diagram::A(1)),
            1 => QuiverClass::ExtendedDynkin {
                diagram: Diagram::A(0),
                delta: ones(),
            },
            _ => QuiverClass::Wild,
        };
    }
    if loops > 0 {
        return QuiverClass::Wild;
    }
    for u in 0..n {
        for v in u + 1..n {
            match q.edges_between(u, v) {
                0 | 1 => {}
                2 if n == 2 => {
                    return QuiverClass::ExtendedDynkin {
                        diagram: Diagram::A(1),
                        delta: ones(),
                    }
                }
                _ => return QuiverClass::Wild,
            }
        }
    }
    let edges = q.arrows().len();
    let adj = q.neighbours();
    if edges == n {
        return if adj.iter().all(|a| a.len() == 2) {
            QuiverClass::ExtendedDynkin {
                diagram: Diagram::A(n - 1),
                delta: ones(),
            }
        } else {
            QuiverClass::Wild
        };
    }
    if edges > n {
        return QuiverClass::Wild;
    }
    classify_tree(&adj)
}

/// Walks from `start` away from `from` until a leaf or a branch vertex,
/// returning the visited vertices (excluding `from`).
fn walk_arm(adj: &[Vec<usize>], from: usize, start: usize) -> Vec<usize> {
    let mut arm = vec![start];
    let (mut prev, mut cur) = (from, start);
    while adj[cur].len() == 2 {
        let next = if adj[cur][0] == prev {
            adj[cur][1]
        } else {
            adj[cur][0]
        };
        prev = cur;
        cur = next;
        arm.push(cur);
    }
    arm
}

fn classify_tree(adj: &[Vec<usize>]) -> QuiverClass {
    let n = adj.len();
    let branches: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    match branches.len() {
        0 => QuiverClass::Dynkin(Diagram::A(n)),
        1 => classify_star(adj, branches[0]),
        2 => {
            let (b0, b1) = (branches[0], branches[1]);
            if adj[b0].len() != 3 || adj[b1].len() != 3 {
                return QuiverClass::Wild;
            }
            // Both branch points need two leaf neighbours; everything else
            // lies on the path joining them.
            let leaves_of = |b: usize| adj[b].iter().filter(|&&w| adj[w].len() == 1).count();
            if leaves_of(b0) != 2 || leaves_of(b1) != 2 {
                return QuiverClass::Wild;
            }
            let mut delta = vec![2; n];
            for v in 0..n {
                if adj[v].len() == 1 {
                    delta[v] = 1;
                }
            }
            QuiverClass::ExtendedDynkin {
                diagram: Diagram::D(n - 1),
                delta: DimVector::new(delta),
            }
        }
        _ => QuiverClass::Wild,
    }
}

fn classify_star(adj: &[Vec<usize>], centre: usize) -> QuiverClass {
    let n = adj.len();
    let mut arms: Vec<Vec<usize>> = adj[centre]
        .iter()
        .map(|&s| walk_arm(adj, centre, s))
        .collect();
    arms.sort_by_key(|a| a.len());
    let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
    let extended = |diagram: Diagram, centre_value: u64, profiles: &[&[u64]]| {
        let mut delta = vec![0; n];
        delta[centre] = centre_value;
        for (arm, values) in arms.iter().zip(profiles) {
            for (&v, &x) in arm.iter().zip(values.iter()) {
                delta[v] = x;
            }
        }
        QuiverClass::ExtendedDynkin {
            diagram,
            delta: DimVector::new(delta),
        }
    };
    match lens.as_slice() {
        [1, 1, 1, 1] => extended(Diagram::D(4), 2, &[&[1], &[1], &[1], &[1]]),
        [_, _, _, _, ..] => QuiverClass::Wild,
        [1, 1, r] => QuiverClass::Dynkin(Diagram::D(r + 3)),
        [1, 2, 2] => QuiverClass::Dynkin(Diagram::E(6)),
        [1, 2, 3] => QuiverClass::Dynkin(Diagram::E(7)),
        [1, 2, 4] => QuiverClass::Dynkin(Diagram::E(8)),
        [2, 2, 2] => extended(Diagram::E(6), 3, &[&[2, 1], &[2, 1], &[2, 1]]),
        [1, 3, 3] => extended(Diagram::E(7), 4, &[&[2], &[3, 2, 1], &[3, 2, 1]]),
        [1, 2, 5] => extended(Diagram::E(8), 6, &[&[3], &[4, 2], &[5, 4, 3, 2, 1]]),
        _ => QuiverClass::Wild,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{families::*, p_form, sym_form};

    fn is_radical(q: &Quiver, delta: &DimVector) -> bool {
        (0..q.vertex_count())
            .all(|v| sym_form(q, delta, &DimVector::unit(q.vertex_count(), v)).unwrap() == 0)
    }

    #[test]
    fn table_examples() {
        assert_eq!(classify_connected(&a2()), QuiverClass::Dynkin(Diagram::A(2)));
        assert_eq!(
            classify_connected(&d4_tilde()),
            QuiverClass::ExtendedDynkin {
                diagram: Diagram::D(4),
                delta: DimVector::new(vec![2, 1, 1, 1, 1])
            }
        );
        assert_eq!(classify_connected(&loops(2)), QuiverClass::Wild);
        assert!(classify_connected(&loops(1)).is_extended());
        assert_eq!(classify_connected(&loops(0)), QuiverClass::Dynkin(Diagram::A(1)));
        assert!(classify_connected(&kronecker(2)).is_extended());
        assert_eq!(classify_connected(&kronecker(3)), QuiverClass::Wild);
        assert!(classify_connected(&cycle(5)).is_extended());
        assert_eq!(classify_connected(&star(&[1, 1, 3])), QuiverClass::Dynkin(Diagram::D(6)));
        assert_eq!(classify_connected(&star(&[1, 2, 4])), QuiverClass::Dynkin(Diagram::E(8)));
        assert_eq!(classify_connected(&star(&[1, 2, 6])), QuiverClass::Wild);
        assert_eq!(classify_connected(&star(&[1, 1, 1, 1, 1])), QuiverClass::Wild);
    }

    #[test]
    fn extended_deltas_span_the_radical() {
        let d6 = Quiver::from_edges(7, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)]);
        let cases = [
            d4_tilde(),
            d6,
            star(&[2, 2, 2]),
            star(&[1, 3, 3]),
            star(&[1, 2, 5]),
            cycle(4),
            kronecker(2),
            loops(1),
        ];
        for q in cases {
            let class = classify_connected(&q);
            let delta = class.delta().unwrap_or_else(|| panic!("{q:?} not extended"));
            assert_eq!(p_form(&q, delta).unwrap(), 1);
            assert!(is_radical(&q, delta), "{class}");
        }
    }

    #[test]
    fn loops_spoil_dynkin() {
        let q = Quiver::from_edges(2, &[(0, 1), (1, 1)]);
        assert_eq!(classify_connected(&q), QuiverClass::Wild);
    }

    #[test]
    fn per_component() {
        let q = Quiver::from_edges(4, &[(0, 1), (2, 3), (3, 2)]);
        let cs = classify(&q);
        assert_eq!(cs.len(), 2);
        assert!(cs[0].class.is_dynkin());
        assert!(cs[1].class.is_extended());
        assert_eq!(cs[1].delta_lifted(4).unwrap(), DimVector::new(vec![0, 0, 1, 1]));
    }
}
