use serde::{Deserialize, Serialize};

/// A structured variable position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Site {
    Vertex(usize),
    /// Row-major grid cell: `(city, position)` for TSP, `(factory, city)` for QAP.
    Cell {
        row: usize,
        col: usize,
    },
    /// Vertex `vertex` painted with `color`.
    Color {
        vertex: usize,
        color: usize,
    },
    /// Color `k` is in use.
    ColorUsed(usize),
}

/// Bijection between structured sites and flat spin indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Encoding {
    /// One spin per vertex.
    Vertices { n: usize },
    /// `rows × cols` grid, index `row·cols + col`.
    Grid { rows: usize, cols: usize },
    /// `n_vertex · n_color` assignment spins followed by `n_color` usage flags.
    Coloring { n_vertex: usize, n_color: usize },
}

impl Encoding {
    pub fn n_spin(&self) -> usize {
        match *self {
            Encoding::Vertices { n } => n,
            Encoding::Grid { rows, cols } => rows * cols,
            Encoding::Coloring { n_vertex, n_color } => n_vertex * n_color + n_color,
        }
    }

    pub fn index(&self, site: Site) -> Option<usize> {
        match (*self, site) {
            (Encoding::Vertices { n }, Site::Vertex(i)) if i < n => Some(i),
            (Encoding::Grid { rows, cols }, Site::Cell { row, col }) if row < rows && col < cols => {
                Some(row * cols + col)
            }
            (Encoding::Coloring { n_vertex, n_color }, Site::Color { vertex, color })
                if vertex < n_vertex && color < n_color =>
            {
                Some(vertex * n_color + color)
            }
            (Encoding::Coloring { n_vertex, n_color }, Site::ColorUsed(k)) if k < n_color => {
                Some(n_vertex * n_color + k)
            }
            _ => None,
        }
    }

    pub fn site(&self, index: usize) -> Option<Site> {
        if index >= self.n_spin() {
            return None;
        }
        Some(match *self {
            Encoding::Vertices { .. } => Site::Vertex(index),
            Encoding::Grid { cols, .. } => Site::Cell { row: index / cols, col: index % cols },
            Encoding::Coloring { n_vertex, n_color } => {
                if index < n_vertex * n_color {
                    Site::Color { vertex: index / n_color, color: index % n_color }
                } else {
                    Site::ColorUsed(index - n_vertex * n_color)
                }
            }
        })
    }

    /// Unchecked grid index.
    #[inline]
    pub(crate) fn cell(&self, row: usize, col: usize) -> usize {
        match *self {
            Encoding::Grid { cols, .. } => row * cols + col,
            _ => unreachable!("cell() on a non-grid encoding"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn any_encoding() -> impl Strategy<Value = Encoding> {
        prop_oneof![
            (0usize..50).prop_map(|n| Encoding::Vertices { n }),
            (1usize..12, 1usize..12).prop_map(|(rows, cols)| Encoding::Grid { rows, cols }),
            (1usize..12, 1usize..12).prop_map(|(n_vertex, n_color)| Encoding::Coloring { n_vertex, n_color }),
        ]
    }

    proptest! {
        #[test]
        fn flat_structured_round_trip(enc in any_encoding()) {
            for i in 0..enc.n_spin() {
                let site = enc.site(i).unwrap();
                prop_assert_eq!(enc.index(site), Some(i));
            }
            prop_assert_eq!(enc.site(enc.n_spin()), None);
        }
    }

    #[test]
    fn foreign_sites_have_no_index() {
        let enc = Encoding::Grid { rows: 2, cols: 3 };
        assert_eq!(enc.index(Site::Vertex(0)), None);
        assert_eq!(enc.index(Site::Cell { row: 2, col: 0 }), None);
        let col = Encoding::Coloring { n_vertex: 2, n_color: 3 };
        assert_eq!(col.index(Site::ColorUsed(2)), Some(8));
        assert_eq!(col.index(Site::ColorUsed(3)), None);
    }
}
