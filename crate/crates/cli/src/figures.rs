//! The six reference figures.

use klab_core::criteria::{paper_catalog_n7, CatalogEntry, Theorem};
use klab_core::reciprocal::XiVector;

pub struct Figure {
    pub title: &'static str,
    pub xi: XiVector,
    /// Catalogue entry the figure illustrates, if any.
    pub entry: Option<CatalogEntry>,
}

fn catalog_entry(theorem: Theorem, index: usize) -> CatalogEntry {
    paper_catalog_n7()
        .into_iter()
        .find(|e| e.theorem == theorem && e.index == index)
        .expect("catalogue entry exists")
}

pub fn figure(index: u8) -> Figure {
    let (title, xi, entry) = match index {
        1 => (
            "one elliptical component among three",
            XiVector::from_ints(&[1, 4, 1, 1, 2, 3]).expect("valid"),
            None,
        ),
        2 => (
            "three concentric ellipses",
            XiVector::from_ints(&[1, 1, 2, 0, 1, 1]).expect("valid"),
            None,
        ),
        3 => {
            let e = catalog_entry(Theorem::OuterInner, 1);
            ("shifted pair, outer and inner foci", e.xi.clone(), Some(e))
        }
        4 => {
            let e = catalog_entry(Theorem::OuterInner, 2);
            ("shifted pair, outer and inner foci", e.xi.clone(), Some(e))
        }
        5 => {
            let e = catalog_entry(Theorem::OuterMiddle, 1);
            ("shifted pair, outer and middle foci", e.xi.clone(), Some(e))
        }
        6 => {
            let e = catalog_entry(Theorem::MiddleInner, 1);
            ("shifted pair, middle and inner foci", e.xi.clone(), Some(e))
        }
        _ => unreachable!("figure index validated by the argument parser"),
    };
    Figure { title, xi, entry }
}
