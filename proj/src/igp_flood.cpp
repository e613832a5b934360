#include "flexsr/igp_flood.hpp"

#include <algorithm>

namespace flexsr {

AdvertType advert_type(const AdvertBody& body) {
  return static_cast<AdvertType>(body.index() + 1);
}

AdvertKey advert_key(NodeId origin, const AdvertBody& body) {
  AdvertKey key{origin, advert_type(body), 0, 0};
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, FadAdvert>) {
          key.a = b.algo;
        } else if constexpr (std::is_same_v<T, LinkAttrAdvert>) {
          key.a = b.link.from.value;
          key.b = b.link.to.value;
        } else {
          key.a = b.algo;
        }
      },
      body);
  return key;
}

bool Lsdb::install(const Advertisement& adv) {
  auto key = advert_key(adv.origin, adv.body);
  auto it = records_.find(key);
  if (it != records_.end() && it->second.seq >= adv.seq) return false;
  records_.insert_or_assign(key, adv);
  return true;
}

std::vector<std::pair<NodeId, FadAdvert>> Lsdb::fads(AlgoId algo) const {
  std::vector<std::pair<NodeId, FadAdvert>> out;
  for (const auto& [key, adv] : records_) {
    if (key.type != AdvertType::Fad || key.a != algo) continue;
    out.emplace_back(adv.origin, std::get<FadAdvert>(adv.body));
  }
  return out;
}

std::optional<PrefixSidAdvert> Lsdb::prefix_sid(NodeId node, AlgoId algo) const {
  auto it = records_.find(AdvertKey{node, AdvertType::PrefixSid, algo, 0});
  if (it == records_.end()) return std::nullopt;
  return std::get<PrefixSidAdvert>(it->second.body);
}

std::optional<LinkAttrAdvert> Lsdb::link_attributes(AdjacencyId link) const {
  auto it = records_.find(
      AdvertKey{link.from, AdvertType::LinkAttr, link.from.value, link.to.value});
  if (it == records_.end()) return std::nullopt;
  return std::get<LinkAttrAdvert>(it->second.body);
}

std::size_t FloodDomain::flood(const Topology& topology, NodeId origin,
                               const AdvertBody& body) {
  if (!topology.has_node(origin)) {
    fail(ErrorCode::UnknownNode, "flood from unknown node " + to_string(origin));
  }
  sync_nodes(topology);
  auto key = advert_key(origin, body);
  Advertisement adv{origin, ++last_seq_[key], body};
  std::size_t updated = 0;
  for (auto& [id, lsdb] : lsdbs_) {
    if (lsdb.install(adv)) ++updated;
  }
  return updated;
}

void FloodDomain::sync_nodes(const Topology& topology) {
  for (const auto& [id, node] : topology.nodes()) {
    lsdbs_.try_emplace(id, Lsdb(id));
  }
}

const Lsdb& FloodDomain::lsdb(NodeId node) const {
  auto it = lsdbs_.find(node);
  if (it == lsdbs_.end()) fail(ErrorCode::UnknownNode, "no LSDB for " + to_string(node));
  return it->second;
}

Lsdb& FloodDomain::mutable_lsdb(NodeId node) {
  auto it = lsdbs_.find(node);
  if (it == lsdbs_.end()) fail(ErrorCode::UnknownNode, "no LSDB for " + to_string(node));
  return it->second;
}

bool FloodDomain::consistent() const {
  if (lsdbs_.empty()) return true;
  const Lsdb& first = lsdbs_.begin()->second;
  return std::all_of(lsdbs_.begin(), lsdbs_.end(),
                     [&](const auto& entry) { return entry.second.same_records(first); });
}

namespace {

class Writer {
 public:
  void u8(std::uint32_t v) { out_.push_back(static_cast<std::uint8_t>(v)); }
  void u16(std::uint32_t v) {
    u8(v >> 8);
    u8(v);
  }
  void u32(std::uint32_t v) {
    u16(v >> 16);
    u16(v & 0xffff);
  }
  void mask(const AdminGroup& g) {
    auto bytes = g.to_bytes();
    out_.insert(out_.end(), bytes.begin(), bytes.end());
  }
  std::vector<std::uint8_t>& bytes() { return out_; }

 private:
  std::vector<std::uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

  std::uint32_t u8() {
    need(1);
    return in_[pos_++];
  }
  std::uint32_t u16() {
    std::uint32_t hi = u8();
    return (hi << 8) | u8();
  }
  std::uint32_t u32() {
    std::uint32_t hi = u16();
    return (hi << 16) | u16();
  }
  AdminGroup mask() {
    need(AdminGroup::kBytes);
    auto g = AdminGroup::from_bytes(in_.subspan(pos_).first<AdminGroup::kBytes>());
    pos_ += AdminGroup::kBytes;
    return g;
  }
  std::size_t remaining() const { return in_.size() - pos_; }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) fail(ErrorCode::MalformedTlv, "truncated advertisement");
  }

  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

[[noreturn]] void malformed(const std::string& what) {
  fail(ErrorCode::MalformedTlv, what);
}

void write_body(Writer& w, const FadAdvert& fad) {
  if (!is_flex_algo(fad.algo)) malformed("FAD algo outside 128-255");
  if (fad.constraints.size() > kMaxConstraintColors) malformed("more than 10 constraints");
  w.u8(fad.algo);
  w.u8(static_cast<std::uint8_t>(fad.metric));
  w.u8(fad.calc_type);
  w.u8(static_cast<std::uint32_t>(fad.constraints.size()));
  for (const auto& c : fad.constraints) {
    w.u8(static_cast<std::uint8_t>(c.op));
    w.mask(c.mask);
  }
}

void write_body(Writer& w, const LinkAttrAdvert& link) {
  w.u32(link.link.from.value);
  w.u32(link.link.to.value);
  w.u32(link.igp_metric);
  w.u32(link.te_metric);
  w.u32(link.delay_us);
  w.mask(link.admin_group);
}

void write_body(Writer& w, const PrefixSidAdvert& sid) {
  if (!is_valid_algo(sid.algo)) malformed("Prefix-SID algo invalid");
  w.u32(sid.node.value);
  w.u32(sid.prefix.value);
  w.u8(sid.algo);
  w.u32(sid.sid_index);
}

FadAdvert read_fad(Reader& r) {
  FadAdvert fad;
  fad.algo = r.u8();
  if (!is_flex_algo(fad.algo)) malformed("FAD algo " + std::to_string(fad.algo) + " outside 128-255");
  auto metric = r.u8();
  if (metric > 2) malformed("unknown metric type " + std::to_string(metric));
  fad.metric = static_cast<MetricType>(metric);
  auto calc = r.u8();
  if (calc > 1) malformed("unknown calculation type " + std::to_string(calc));
  fad.calc_type = static_cast<std::uint8_t>(calc);
  auto count = r.u8();
  if (count > kMaxConstraintColors) {
    malformed("FAD declares " + std::to_string(count) + " constraints (max 10)");
  }
  for (std::uint32_t i = 0; i < count; ++i) {
    auto subtype = r.u8();
    if (subtype < 1 || subtype > 3) malformed("unknown constraint subtype " + std::to_string(subtype));
    Constraint c{static_cast<ConstraintOp>(subtype), r.mask()};
    int colors = c.mask.popcount();
    if (colors < 1 || colors > static_cast<int>(kMaxConstraintColors)) {
      malformed("constraint carries " + std::to_string(colors) + " colours (1-10 allowed)");
    }
    fad.constraints.push_back(c);
  }
  return fad;
}

LinkAttrAdvert read_link(Reader& r) {
  LinkAttrAdvert link;
  link.link.from = NodeId{r.u32()};
  link.link.to = NodeId{r.u32()};
  link.igp_metric = r.u32();
  link.te_metric = r.u32();
  link.delay_us = r.u32();
  link.admin_group = r.mask();
  if (link.link.from.value == 0 || link.link.to.value == 0 || link.link.from == link.link.to) {
    malformed("invalid link endpoints");
  }
  if (link.delay_us == 0) malformed("link delay must be >= 1");
  return link;
}

PrefixSidAdvert read_sid(Reader& r) {
  PrefixSidAdvert sid;
  sid.node = NodeId{r.u32()};
  sid.prefix = Ipv4Addr{r.u32()};
  sid.algo = r.u8();
  if (!is_valid_algo(sid.algo)) malformed("Prefix-SID algo " + std::to_string(sid.algo) + " invalid");
  sid.sid_index = r.u32();
  return sid;
}

}  // namespace

std::vector<std::uint8_t> encode_advert(const Advertisement& adv) {
  Writer payload;
  std::visit([&](const auto& body) { write_body(payload, body); }, adv.body);
  payload.u32(adv.origin.value);
  payload.u32(adv.seq);

  Writer out;
  out.u8(static_cast<std::uint8_t>(advert_type(adv.body)));
  out.u16(static_cast<std::uint32_t>(payload.bytes().size()));
  auto& bytes = out.bytes();
  bytes.insert(bytes.end(), payload.bytes().begin(), payload.bytes().end());
  return std::move(bytes);
}

Advertisement decode_advert(std::span<const std::uint8_t> bytes) {
  Reader header(bytes);
  auto type = header.u8();
  auto length = header.u16();
  if (bytes.size() - 3 != length) {
    malformed("length field " + std::to_string(length) + " does not match " +
              std::to_string(bytes.size() - 3) + " payload bytes");
  }
  Reader r(bytes.subspan(3));
  Advertisement adv;
  switch (type) {
    case 1: adv.body = read_fad(r); break;
    case 2: adv.body = read_link(r); break;
    case 3: adv.body = read_sid(r); break;
    default: malformed("unknown advertisement type " + std::to_string(type));
  }
  adv.origin = NodeId{r.u32()};
  adv.seq = r.u32();
  if (adv.origin.value == 0) malformed("origin node id 0");
  if (r.remaining() != 0) malformed("trailing bytes after advertisement");
  return adv;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

}  // namespace flexsr
