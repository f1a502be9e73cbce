use super::framework::Framework;

/// Graphviz digraph with nodes in canonical order and one edge per attack.
pub fn framework_to_dot(f: &Framework) -> String {
    let mut out = String::from("digraph af {\n");
    for n in f.nodes() {
        out.push_str(&format!("  \"{}\";\n", escape(n)));
    }
    for (x, y) in f.attacks() {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", escape(x), escape(y)));
    }
    out.push_str("}\n");
    out
}

pub(crate) fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example1_edges() {
        let f = Framework::new(
            ["A", "B", "C", "D"],
            [("A", "B"), ("A", "C"), ("B", "A"), ("B", "C"), ("C", "D")],
        )
        .unwrap();
        let dot = framework_to_dot(&f);
        let edges: Vec<&str> = dot
            .lines()
            .filter(|l| l.contains("->"))
            .map(str::trim)
            .collect();
        assert_eq!(
            edges,
            [
                "\"A\" -> \"B\";",
                "\"A\" -> \"C\";",
                "\"B\" -> \"A\";",
                "\"B\" -> \"C\";",
                "\"C\" -> \"D\";"
            ]
        );
    }

    #[test]
    fn empty_and_two_cycle() {
        assert_eq!(framework_to_dot(&Framework::default()), "digraph af {\n}\n");
        let f = Framework::new(["a", "b"], [("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(framework_to_dot(&f).matches("->").count(), 2);
    }
}
