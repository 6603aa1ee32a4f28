#include "facticity/microvm.hpp"

#include <utility>

namespace facticity {

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::ok: return "ok";
    case RunStatus::invalid_index: return "invalid_index";
    case RunStatus::abort_budget: return "abort_budget";
    case RunStatus::abort_semantics: return "abort_semantics";
  }
  return "invalid_status";
}

IndexKind parse_index(std::span<const std::uint8_t> index_bits) {
  if (index_bits.empty()) return IndexKind::identity;
  if (index_bits[0] == 1) {
    return index_bits.size() == 1 ? IndexKind::swap : IndexKind::invalid;
  }
  // "0" + body: the body must pack into whole opcodes.
  return (index_bits.size() - 1) % 2 == 0 ? IndexKind::program : IndexKind::invalid;
}

IndexKind parse_index(const BitString& index) { return parse_index(index.bits()); }

namespace {

RunOutcome execute_program(std::span<const std::uint8_t> body,
                           std::span<const std::uint8_t> p, const Budget& b,
                           RunOutcome res) {
  std::size_t ppos = 0;
  BitString& out = res.output;
  const auto fail = [&](RunStatus status) {
    res.status = status;
    res.consumed_all = ppos == p.size();
    return std::move(res);
  };
  for (std::size_t j = 0; j + 1 < body.size(); j += 2) {
    const int op = body[j] * 2 + body[j + 1];
    switch (op) {
      case kOpOut0:
      case kOpOut1:
      case kOpCopy: {
        res.steps += 1;
        if (res.steps > b.max_steps) return fail(RunStatus::abort_budget);
        if (out.size() + 1 > b.max_output) return fail(RunStatus::abort_budget);
        if (op == kOpCopy) {
          if (ppos >= p.size()) return fail(RunStatus::abort_semantics);
          out.push_back(p[ppos++]);
        } else {
          out.push_back(op == kOpOut1 ? 1 : 0);
        }
        break;
      }
      case kOpDouble: {
        if (out.empty()) return fail(RunStatus::abort_semantics);
        const std::uint64_t appended = out.size();
        res.steps += appended;
        if (res.steps > b.max_steps) return fail(RunStatus::abort_budget);
        if (out.size() + appended > b.max_output) return fail(RunStatus::abort_budget);
        out.append_self();
        break;
      }
    }
  }
  res.consumed_all = ppos == p.size();
  res.status = res.consumed_all ? RunStatus::ok : RunStatus::abort_semantics;
  return res;
}

}  // namespace

RunOutcome run(const BitString& w, const Budget& b) {
  if (b.max_steps < 1 || b.max_output < 1) {
    throw DomainError("run: budget fields must both be >= 1");
  }
  RunOutcome res;
  BitString scratch;  // owns the rebuilt input while a swap is unwound
  std::span<const std::uint8_t> cur = w.bits();
  for (;;) {
    std::size_t pos = 0;
    std::span<const std::uint8_t> index;
    try {
      index = decode_sd_at(cur, pos);
    } catch (const TruncatedFrame&) {
      res.status = RunStatus::invalid_index;
      return res;
    }
    const std::span<const std::uint8_t> p = cur.subspan(pos);
    switch (parse_index(index)) {
      case IndexKind::identity: {
        if (p.size() > b.max_output) {
          res.status = RunStatus::abort_budget;
          return res;
        }
        res.steps += p.size();
        if (res.steps > b.max_steps) {
          res.status = RunStatus::abort_budget;
          return res;
        }
        res.output = BitString(p);
        res.consumed_all = true;
        res.status = RunStatus::ok;
        return res;
      }
      case IndexKind::swap: {
        // p must itself split as frame(p') + i'; the machine then runs
        // frame(i') + p'.  Nesting is legal; the step budget bounds it.
        std::size_t inner = 0;
        std::span<const std::uint8_t> payload;
        try {
          payload = decode_sd_at(p, inner);
        } catch (const TruncatedFrame&) {
          res.status = RunStatus::abort_semantics;
          return res;
        }
        res.steps += 1;  // dispatch cost
        if (res.steps > b.max_steps) {
          res.status = RunStatus::abort_budget;
          return res;
        }
        BitString next = encode_sd(p.subspan(inner));
        next.append(payload);
        scratch = std::move(next);
        cur = scratch.bits();
        continue;
      }
      case IndexKind::program:
        return execute_program(index.subspan(1), p, b, std::move(res));
      case IndexKind::invalid: {
        res.status = RunStatus::invalid_index;
        return res;
      }
    }
  }
}

}  // namespace facticity
