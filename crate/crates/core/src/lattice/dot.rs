use std::fmt::Write;

use super::SubquandleLattice;

/// Graphviz rendering of the Hasse diagram: one node per subquandle in
/// lattice order, labelled with its 1-based members, and one edge per
/// covering pair drawn from the smaller set to the larger.
pub fn to_dot(lattice: &SubquandleLattice) -> String {
    let mut out = String::from("digraph subquandles {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, s) in lattice.elements().iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{}\"];", s.one_based()).unwrap();
    }
    for (a, b) in lattice.covers() {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::enumerate_subquandles;
    use crate::quandle::FiniteQuandle;

    #[test]
    fn tait_dot() {
        let q = FiniteQuandle::from_rows(&[vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]).unwrap();
        let dot = to_dot(&enumerate_subquandles(&q).unwrap());
        let expected = "digraph subquandles {\n  rankdir=BT;\n  node [shape=box];\n  \
n0 [label=\"{}\"];\n  n1 [label=\"{1}\"];\n  n2 [label=\"{2}\"];\n  n3 [label=\"{3}\"];\n  \
n4 [label=\"{1,2,3}\"];\n  n0 -> n1;\n  n0 -> n2;\n  n0 -> n3;\n  n1 -> n4;\n  n2 -> n4;\n  n3 -> n4;\n}\n";
        assert_eq!(dot, expected);
    }
}
