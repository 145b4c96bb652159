#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qauto {

// Generator alphabet with involution data. Every symbol is either
// self-adjoint or paired with a distinct adjoint symbol; star() is an
// involution on symbol indices by construction.
class GenAlphabet {
 public:
  int add_selfadjoint(const std::string& name) {
    int id = add(name);
    star_.push_back(id);
    return id;
  }

  // Adds s and s*; returns the index of s.
  int add_pair(const std::string& name, const std::string& star_name) {
    int a = add(name);
    star_.push_back(a + 1);
    int b = add(star_name);
    star_.push_back(a);
    (void)b;
    return a;
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  int star(int i) const { return star_.at(i); }
  bool self_adjoint(int i) const { return star_.at(i) == i; }

  int index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw std::out_of_range("unknown generator: " + name);
    return it->second;
  }
  bool has(const std::string& name) const { return by_name_.count(name) != 0; }

  bool operator==(const GenAlphabet& o) const {
    return names_ == o.names_ && star_ == o.star_;
  }

 private:
  int add(const std::string& name) {
    if (by_name_.count(name)) throw std::invalid_argument("duplicate generator: " + name);
    if (names_.size() >= 255) throw std::length_error("alphabet too large");
    int id = static_cast<int>(names_.size());
    names_.push_back(name);
    by_name_[name] = id;
    return id;
  }

  std::vector<std::string> names_;
  std::vector<int> star_;
  std::map<std::string, int> by_name_;
};

}  // namespace qauto
