#include "semiconj/transformation.hpp"

#include <numeric>
#include <set>

#include "semiconj/errors.hpp"

namespace semiconj {

  Transformation::Transformation(std::vector<point_type> images)
      : _images(std::move(images)) {
    for (auto y : _images) {
      if (y >= _images.size()) {
        throw IndexOutOfRange("transformation image " + std::to_string(y)
                              + " is out of range for degree "
                              + std::to_string(_images.size()));
      }
    }
  }

  Transformation Transformation::identity(std::size_t degree) {
    std::vector<point_type> images(degree);
    std::iota(images.begin(), images.end(), point_type(0));
    return Transformation(std::move(images));
  }

  std::size_t Transformation::rank() const {
    return std::set<point_type>(_images.begin(), _images.end()).size();
  }

  std::string Transformation::to_string() const {
    std::string out;
    for (std::size_t t = 0; t < _images.size(); ++t) {
      if (degree() > 10 && t > 0) {
        out += ' ';
      }
      out += std::to_string(_images[t]);
    }
    return out;
  }

  Transformation compose(Transformation const& a, Transformation const& b) {
    if (a.degree() != b.degree()) {
      throw DegreeMismatch("cannot compose transformations of degree "
                           + std::to_string(a.degree()) + " and "
                           + std::to_string(b.degree()));
    }
    std::vector<Transformation::point_type> images(a.degree());
    for (std::size_t t = 0; t < images.size(); ++t) {
      images[t] = a[b[t]];
    }
    return Transformation(std::move(images));
  }

}  // namespace semiconj

std::size_t std::hash<semiconj::Transformation>::operator()(
    semiconj::Transformation const& x) const noexcept {
  std::size_t h = x.degree();
  for (auto y : x.images()) {
    h = h * 1'000'003 + y;
  }
  return h;
}
