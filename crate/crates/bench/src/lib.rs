//! Fixed graphs for the criterion benches.

use tfpoly::{example_graph, MultiGraph};

/// Named inputs of increasing size.
pub fn fixtures() -> Vec<(&'static str, MultiGraph)> {
    vec![
        ("c4", MultiGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()),
        ("p8", example_graph()),
        ("k4", MultiGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()),
        ("theta", MultiGraph::new(2, &[(0, 1), (0, 1), (0, 1), (1, 0), (0, 0)]).unwrap()),
    ]
}
