#include "semiconj/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <utility>

namespace semiconj {

  UnionFind::UnionFind(std::size_t n) : _parent(n), _rank(n, 0), _least(n) {
    std::iota(_parent.begin(), _parent.end(), element_id(0));
    std::iota(_least.begin(), _least.end(), element_id(0));
  }

  element_id UnionFind::find(element_id x) {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x          = _parent[x];
    }
    return x;
  }

  bool UnionFind::unite(element_id x, element_id y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    if (_rank[x] < _rank[y]) {
      std::swap(x, y);
    } else if (_rank[x] == _rank[y]) {
      ++_rank[x];
    }
    _parent[y] = x;
    _least[x]  = std::min(_least[x], _least[y]);
    return true;
  }

  Partition Partition::discrete(std::size_t n) {
    std::vector<std::size_t> labels(n);
    std::iota(labels.begin(), labels.end(), std::size_t(0));
    return from_labels(labels);
  }

  Partition Partition::from_labels(std::span<std::size_t const> labels) {
    Partition                          p;
    std::map<std::size_t, std::size_t> renumber;
    p._class_of.resize(labels.size());
    // Scanning in id order numbers classes by least member.
    for (std::size_t x = 0; x < labels.size(); ++x) {
      auto [it, inserted] = renumber.emplace(labels[x], p._classes.size());
      if (inserted) {
        p._classes.emplace_back();
      }
      p._class_of[x] = it->second;
      p._classes[it->second].push_back(static_cast<element_id>(x));
    }
    return p;
  }

  Partition Partition::from_union_find(UnionFind& uf) {
    std::vector<std::size_t> labels(uf.size());
    for (std::size_t x = 0; x < uf.size(); ++x) {
      labels[x] = uf.least(static_cast<element_id>(x));
    }
    return from_labels(labels);
  }

  bool Partition::refines(Partition const& coarser) const {
    if (size() != coarser.size()) {
      return false;
    }
    return std::all_of(_classes.begin(), _classes.end(), [&](auto const& c) {
      return std::all_of(c.begin(), c.end(), [&](element_id x) {
        return coarser.same(x, c.front());
      });
    });
  }

  Partition Partition::meet(Partition const& other) const {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pairs;
    std::vector<std::size_t>                                   labels(size());
    for (std::size_t x = 0; x < size(); ++x) {
      auto key  = std::make_pair(_class_of[x], other._class_of[x]);
      labels[x] = pairs.emplace(key, pairs.size()).first->second;
    }
    return from_labels(labels);
  }

  Partition Partition::join(Partition const& other) const {
    UnionFind uf(size());
    for (auto const* p : {this, &other}) {
      for (auto const& c : p->_classes) {
        for (element_id x : c) {
          uf.unite(c.front(), x);
        }
      }
    }
    return from_union_find(uf);
  }

  std::vector<std::size_t> Partition::class_sizes() const {
    std::vector<std::size_t> out;
    out.reserve(_classes.size());
    for (auto const& c : _classes) {
      out.push_back(c.size());
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }

}  // namespace semiconj
