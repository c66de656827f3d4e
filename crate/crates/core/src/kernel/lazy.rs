use std::fmt;
use std::sync::{Arc, OnceLock};

type Producer<T> = Arc<dyn Fn(usize) -> T + Send + Sync>;

/// A fixed-length table whose entries are computed on first access and then
/// cached. Safe to share across threads; clones share the cache.
#[derive(Clone)]
pub struct LazyTable<T> {
    cells: Arc<[OnceLock<T>]>,
    producer: Producer<T>,
}

impl<T: Send + Sync> LazyTable<T> {
    pub fn new<F>(len: usize, producer: F) -> Self
    where
        F: Fn(usize) -> T + Send + Sync + 'static,
    {
        LazyTable {
            cells: (0..len).map(|_| OnceLock::new()).collect(),
            producer: Arc::new(producer),
        }
    }

    pub fn filled(values: Vec<T>) -> Self
    where
        T: 'static,
    {
        let len = values.len();
        let cells: Arc<[OnceLock<T>]> = values.into_iter().map(OnceLock::from).collect();
        LazyTable {
            cells,
            producer: Arc::new(move |i| {
                panic!("entry {i} of a {len}-entry filled table was not preset")
            }),
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn get(&self, i: usize) -> &T {
        self.cells[i].get_or_init(|| (self.producer)(i))
    }

    /// Number of entries already computed.
    pub fn computed(&self) -> usize {
        self.cells.iter().filter(|c| c.get().is_some()).count()
    }
}

impl<T> fmt::Debug for LazyTable<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LazyTable({} entries)", self.cells.len())
    }
}
