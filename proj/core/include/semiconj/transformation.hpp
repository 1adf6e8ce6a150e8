#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace semiconj {

  /// A total map on {0, ..., degree-1}; an element of T(n).
  class Transformation {
   public:
    using point_type = std::uint32_t;

    Transformation() = default;

    /// Throws IndexOutOfRange if an image is not below the degree.
    explicit Transformation(std::vector<point_type> images);

    static Transformation identity(std::size_t degree);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    point_type operator[](std::size_t t) const {
      return _images[t];
    }

    std::vector<point_type> const& images() const noexcept {
      return _images;
    }

    std::size_t rank() const;

    /// Images written as a digit string, e.g. "120".
    std::string to_string() const;

    auto operator<=>(Transformation const&) const = default;

   private:
    std::vector<point_type> _images;
  };

  /// (a*b)(t) = a(b(t)): the right factor acts first.
  Transformation compose(Transformation const& a, Transformation const& b);

}  // namespace semiconj

template <>
struct std::hash<semiconj::Transformation> {
  std::size_t operator()(semiconj::Transformation const& x) const noexcept;
};
