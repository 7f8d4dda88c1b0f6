#ifndef HCW_PERM_HPP
#define HCW_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hcw
{

// Permutation of {0, ..., degree-1}. Products compose left to right:
// (a * b)(i) = b(a(i)), i.e. apply a first. Textual I/O uses 1-based cycle
// notation.
class Perm
{
public:
  Perm() = default;
  explicit Perm(unsigned degree);
  explicit Perm(std::vector<std::uint32_t> images);

  // "(1 2 3)(4 5)"; "()" is the identity. Points are 1-based.
  static Perm parse(std::string_view cycles, unsigned degree);

  unsigned degree() const
  { return static_cast<unsigned>(images_.size()); }

  std::uint32_t operator[](unsigned i) const
  { return images_[i]; }

  std::vector<std::uint32_t> const &images() const
  { return images_; }

  bool is_identity() const;

  // Smallest moved point; degree() for the identity.
  unsigned first_moved_point() const;

  Perm operator*(Perm const &rhs) const;
  Perm &operator*=(Perm const &rhs);
  Perm inverse() const;
  Perm pow(long e) const;

  // x^g = g^-1 x g
  Perm conjugate_by(Perm const &g) const
  { return g.inverse() * *this * g; }

  unsigned long order() const;

  std::vector<std::vector<unsigned>> cycles() const;

  // 1-based cycle notation, fixed points omitted.
  std::string to_string() const;

  friend bool operator==(Perm const &, Perm const &) = default;
  friend auto operator<=>(Perm const &a, Perm const &b)
  { return a.images_ <=> b.images_; }

private:
  std::vector<std::uint32_t> images_;
};

struct PermHash
{
  std::size_t operator()(Perm const &p) const noexcept;
};

} // namespace hcw

#endif // HCW_PERM_HPP
