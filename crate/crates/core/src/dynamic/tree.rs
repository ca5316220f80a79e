//! Newly inserted items, in value order, each with its position in the
//! current list.
//!
//! A treap keyed implicitly by rank. Every node carries its subtree size
//! and a pending position offset for its children, so adding a constant to
//! the positions of all entries from some rank onward costs one split and
//! one merge.

type Link<T> = Option<Box<Node<T>>>;

#[derive(Debug, Clone)]
struct Node<T> {
    value: T,
    position: isize,
    /// Offset not yet applied to either child subtree.
    pending: isize,
    priority: u64,
    size: usize,
    left: Link<T>,
    right: Link<T>,
}

impl<T> Node<T> {
    fn new(value: T, position: isize, priority: u64) -> Self {
        Self {
            value,
            position,
            pending: 0,
            priority,
            size: 1,
            left: None,
            right: None,
        }
    }

    fn shift(&mut self, delta: isize) {
        self.position += delta;
        self.pending += delta;
    }

    fn push(&mut self) {
        if self.pending != 0 {
            let d = self.pending;
            if let Some(l) = self.left.as_mut() {
                l.shift(d);
            }
            if let Some(r) = self.right.as_mut() {
                r.shift(d);
            }
            self.pending = 0;
        }
    }

    fn update(&mut self) {
        self.size = 1 + size(&self.left) + size(&self.right);
    }
}

fn size<T>(link: &Link<T>) -> usize {
    link.as_ref().map_or(0, |n| n.size)
}

/// Splits into the first `k` entries and the rest.
fn split<T>(link: Link<T>, k: usize) -> (Link<T>, Link<T>) {
    match link {
        None => (None, None),
        Some(mut node) => {
            node.push();
            let left_size = size(&node.left);
            if k <= left_size {
                let (a, b) = split(node.left.take(), k);
                node.left = b;
                node.update();
                (a, Some(node))
            } else {
                let (a, b) = split(node.right.take(), k - left_size - 1);
                node.right = a;
                node.update();
                (Some(node), b)
            }
        }
    }
}

fn merge<T>(left: Link<T>, right: Link<T>) -> Link<T> {
    match (left, right) {
        (None, r) => r,
        (l, None) => l,
        (Some(mut l), Some(mut r)) => {
            if l.priority > r.priority {
                l.push();
                l.right = merge(l.right.take(), Some(r));
                l.update();
                Some(l)
            } else {
                r.push();
                r.left = merge(Some(l), r.left.take());
                r.update();
                Some(r)
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct InsertedItemsTree<T> {
    root: Link<T>,
    state: u64,
}

impl<T> Default for InsertedItemsTree<T> {
    fn default() -> Self {
        Self {
            root: None,
            state: 0x9e37_79b9_7f4a_7c15,
        }
    }
}

impl<T: Ord> InsertedItemsTree<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        size(&self.root)
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    /// Number of entries smaller than `value`, and whether `value` itself is
    /// present.
    pub fn rank_of(&self, value: &T) -> (usize, bool) {
        let mut rank = 0;
        let mut cur = self.root.as_deref();
        while let Some(node) = cur {
            match value.cmp(&node.value) {
                std::cmp::Ordering::Less => cur = node.left.as_deref(),
                std::cmp::Ordering::Equal => return (rank + size(&node.left), true),
                std::cmp::Ordering::Greater => {
                    rank += size(&node.left) + 1;
                    cur = node.right.as_deref();
                }
            }
        }
        (rank, false)
    }

    /// Entry of rank `r` as `(value, position)`.
    pub fn get(&self, r: usize) -> Option<(&T, usize)> {
        let mut rest = r;
        let mut offset = 0;
        let mut cur = self.root.as_deref();
        while let Some(node) = cur {
            let left_size = size(&node.left);
            if rest < left_size {
                offset += node.pending;
                cur = node.left.as_deref();
            } else if rest == left_size {
                return Some((&node.value, (node.position + offset) as usize));
            } else {
                rest -= left_size + 1;
                offset += node.pending;
                cur = node.right.as_deref();
            }
        }
        None
    }

    /// Inserts an entry so that it gets rank `r`. The caller keeps value
    /// order intact.
    pub fn insert_at(&mut self, r: usize, value: T, position: usize) {
        debug_assert!(r <= self.len());
        let priority = self.next_priority();
        let (a, b) = split(self.root.take(), r);
        let node = Some(Box::new(Node::new(value, position as isize, priority)));
        self.root = merge(merge(a, node), b);
    }

    /// Removes and returns the entry of rank `r`.
    pub fn remove_at(&mut self, r: usize) -> Option<(T, usize)> {
        if r >= self.len() {
            return None;
        }
        let (a, rest) = split(self.root.take(), r);
        let (mid, b) = split(rest, 1);
        self.root = merge(a, b);
        mid.map(|node| (node.value, node.position as usize))
    }

    /// Adds `delta` to the position of every entry with rank `r` or above.
    pub fn shift_from(&mut self, r: usize, delta: isize) {
        if r >= self.len() || delta == 0 {
            return;
        }
        let (a, mut b) = split(self.root.take(), r);
        if let Some(node) = b.as_mut() {
            node.shift(delta);
        }
        self.root = merge(a, b);
    }

    /// All entries in rank order.
    pub fn entries(&self) -> Vec<(&T, usize)> {
        fn walk<'a, T>(link: &'a Link<T>, offset: isize, out: &mut Vec<(&'a T, usize)>) {
            if let Some(node) = link {
                walk(&node.left, offset + node.pending, out);
                out.push((&node.value, (node.position + offset) as usize));
                walk(&node.right, offset + node.pending, out);
            }
        }
        let mut out = Vec::with_capacity(self.len());
        walk(&self.root, 0, &mut out);
        out
    }

    fn next_priority(&mut self) -> u64 {
        // xorshift64
        let mut x = self.state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.state = x;
        x
    }
}
