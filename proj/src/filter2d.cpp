#include "sabf/filter2d.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "sabf/sizing.hpp"

namespace sabf {

void Filter2DConfig::validate() const {
  if (!is_prime(rows) || !is_prime(cols) || rows == cols)
    throw std::invalid_argument("matrix dimensions must be distinct primes");
  if (beta == 0 || beta > 64) throw std::invalid_argument("beta must lie in [1, 64]");
  if (lambda == 0 || hash_calls != (lambda + 1) / 2)
    throw std::invalid_argument("hash_calls must equal ceil(lambda / 2)");
  if (seeds.size() != hash_calls) throw std::invalid_argument("one seed per hash call required");
  if (static_cast<std::uint8_t>(hash_fn) >= kAllHashFunctions.size())
    throw std::invalid_argument("unknown hash function id");
}

std::vector<Seed> derive_seeds(std::uint32_t count, Seed master) {
  std::vector<Seed> seeds(count);
  for (std::uint32_t i = 0; i < count; ++i) seeds[i] = master * (i + 1);
  return seeds;
}

Filter2DConfig size_params(std::uint64_t n, double epsilon, HashFunctionId hash_fn, std::uint32_t beta) {
  Filter2DConfig c;
  c.n = n;
  c.epsilon = epsilon;
  c.m = optimal_bits(n, epsilon);
  c.lambda = optimal_hash_count(c.m, n);
  c.hash_calls = (c.lambda + 1) / 2;
  c.beta = beta;
  c.hash_fn = hash_fn;
  c.seeds = derive_seeds(c.hash_calls);

  const std::uint64_t cells = (c.m + 63) / 64;
  const auto s = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(cells))));
  if (s <= 2) {
    c.rows = 2;
    c.cols = 3;
  } else {
    c.rows = prev_prime(s);
    c.cols = next_prime(s);
    while (c.rows * c.cols < cells) c.cols = next_prime(c.cols);
  }
  c.validate();
  return c;
}

Digest companion_digest(Digest h) {
  h ^= 0x85ebca6bu;
  h ^= h >> 16;
  h *= 0x85ebca6bu;
  h ^= h >> 13;
  h *= 0xc2b2ae35u;
  h ^= h >> 16;
  return h;
}

Filter2D::Filter2D(Filter2DConfig config) : config_(std::move(config)) {
  config_.validate();
  cells_.assign(config_.cell_count(), 0);
}

bool Filter2D::insert(std::string_view key) {
  const Bytes bytes = as_bytes(key);
  for (std::uint32_t call = 0; call < config_.hash_calls; ++call) {
    const Digest h = hash(config_.hash_fn, bytes, config_.seeds[call]);
    const BitAddress a = address(h, config_);
    cell(a) |= std::uint64_t{1} << a.bit;
    if (2 * call + 1 < config_.lambda) {
      const BitAddress b = address(companion_digest(h), config_);
      cell(b) |= std::uint64_t{1} << b.bit;
    }
  }
  ++inserted_count_;
  return true;
}

bool Filter2D::contains(std::string_view key) const {
  const Bytes bytes = as_bytes(key);
  for (std::uint32_t call = 0; call < config_.hash_calls; ++call) {
    const Digest h = hash(config_.hash_fn, bytes, config_.seeds[call]);
    const BitAddress a = address(h, config_);
    if (((cell(a) & (std::uint64_t{1} << a.bit)) >> a.bit) == 0) return false;
    if (2 * call + 1 < config_.lambda) {
      const BitAddress b = address(companion_digest(h), config_);
      if (((cell(b) & (std::uint64_t{1} << b.bit)) >> b.bit) == 0) return false;
    }
  }
  return true;
}

std::uint64_t Filter2D::set_bit_count() const {
  const std::uint64_t mask = config_.beta == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << config_.beta) - 1;
  std::uint64_t total = 0;
  for (auto w : cells_) total += static_cast<std::uint64_t>(std::popcount(w & mask));
  return total;
}

double Filter2D::fill_ratio() const {
  return static_cast<double>(set_bit_count()) / static_cast<double>(config_.addressable_bits());
}

// Snapshot layout, little-endian:
//   "D2BF" | version u8 | hash_fn u8 | beta u8
//   n, m, rows, cols, lambda, hash_calls, inserted_count   (u64 each)
//   seeds (u32 x hash_calls) | cells (u64 x rows*cols, row-major) | crc32 u32
namespace {

constexpr std::uint8_t kMagic[4] = {'D', '2', 'B', 'F'};
constexpr std::uint8_t kVersion = 0x01;
constexpr std::size_t kHeaderBytes = 4 + 3 + 7 * 8;

class Writer {
 public:
  explicit Writer(std::vector<std::uint8_t>& out) : out_(out) {}
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }

 private:
  std::vector<std::uint8_t>& out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}
  std::size_t remaining() const { return in_.size() - pos_; }
  std::uint8_t u8() {
    need(1);
    return in_[pos_++];
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t{in_[pos_++]} << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{in_[pos_++]} << (8 * i);
    return v;
  }

 private:
  void need(std::size_t k) const {
    if (remaining() < k) throw DecodeError("snapshot truncated");
  }
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> Filter2D::serialize() const {
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderBytes + 4 * config_.seeds.size() + 8 * cells_.size() + 4);
  Writer w(out);
  for (auto b : kMagic) w.u8(b);
  w.u8(kVersion);
  w.u8(static_cast<std::uint8_t>(config_.hash_fn));
  w.u8(static_cast<std::uint8_t>(config_.beta));
  w.u64(config_.n);
  w.u64(config_.m);
  w.u64(config_.rows);
  w.u64(config_.cols);
  w.u64(config_.lambda);
  w.u64(config_.hash_calls);
  w.u64(inserted_count_);
  for (auto s : config_.seeds) w.u32(s);
  for (auto c : cells_) w.u64(c);
  w.u32(crc32(out, 0));
  return out;
}

Filter2D Filter2D::deserialize(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  for (auto b : kMagic)
    if (r.u8() != b) throw DecodeError("bad snapshot magic");
  if (const auto version = r.u8(); version != kVersion)
    throw DecodeError("unsupported snapshot version " + std::to_string(version));

  Filter2DConfig c;
  const std::uint8_t fn = r.u8();
  if (fn >= kAllHashFunctions.size()) throw DecodeError("unknown hash function id in snapshot");
  c.hash_fn = static_cast<HashFunctionId>(fn);
  c.beta = r.u8();
  c.n = r.u64();
  c.m = r.u64();
  c.rows = r.u64();
  c.cols = r.u64();
  const std::uint64_t lambda = r.u64();
  const std::uint64_t hash_calls = r.u64();
  const std::uint64_t inserted = r.u64();

  if (c.n == 0) throw DecodeError("snapshot has zero capacity");
  if (lambda == 0 || lambda > 1024 || hash_calls != (lambda + 1) / 2)
    throw DecodeError("inconsistent hash counts in snapshot");
  c.lambda = static_cast<std::uint32_t>(lambda);
  c.hash_calls = static_cast<std::uint32_t>(hash_calls);
  if (c.rows == 0 || c.cols == 0 || c.rows > (std::uint64_t{1} << 28) || c.cols > (std::uint64_t{1} << 28))
    throw DecodeError("matrix dimensions out of range");
  // Size check before any allocation driven by untrusted fields.
  const std::uint64_t expected = 4 * hash_calls + 8 * c.rows * c.cols + 4;
  if (r.remaining() < expected) throw DecodeError("snapshot truncated");
  if (r.remaining() > expected) throw DecodeError("trailing bytes after snapshot");
  if (crc32(bytes.first(bytes.size() - 4), 0) != Reader(bytes.last(4)).u32())
    throw DecodeError("snapshot checksum mismatch");

  for (std::uint64_t i = 0; i < hash_calls; ++i) c.seeds.push_back(r.u32());
  // epsilon is not stored; recover it from the bit budget.
  c.epsilon = std::exp(-static_cast<double>(c.m) * std::numbers::ln2 * std::numbers::ln2 / static_cast<double>(c.n));
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw DecodeError(std::string("invalid snapshot config: ") + e.what());
  }

  Filter2D filter(std::move(c));
  const std::uint64_t beta = filter.config_.beta;
  const std::uint64_t dead = beta == 64 ? 0 : ~((std::uint64_t{1} << beta) - 1);
  for (auto& cell : filter.cells_) {
    cell = r.u64();
    if (cell & dead) throw DecodeError("snapshot sets bits at or above beta");
  }
  filter.inserted_count_ = inserted;
  return filter;
}

}  // namespace sabf
