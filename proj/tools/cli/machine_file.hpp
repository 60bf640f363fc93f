#pragma once

// JSON machine files. Rationals are "p/q" strings; state, letter and
// operation references are by name.

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include <cotrace/machines.hpp>
#include <cotrace/strategies.hpp>

namespace cotrace::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// "strange" files hold a generative machine read with the strange logic.
enum class MachineKind { Moore, Generative, Tree, IO, Generalized, Strange };

const char* to_string(MachineKind kind) noexcept;

using Machine = std::variant<MooreCoalgebra, GenerativeCoalgebra, TreeCoalgebra, IOSystem, GeneralizedCoalgebra>;

struct MachineFile {
  MachineKind kind;
  Machine machine;
};

/// Throws Error(Parse) naming the offending field, or the error raised by
/// the machine constructor (undeclared symbol, mass overflow, ...).
MachineFile parse_machine(const Json& doc);
MachineFile parse_machine_text(std::string_view text);
MachineFile load_machine(const std::filesystem::path& path);

Json serialize(const MachineFile& file);

Json omega_json(const OmegaValue& v);

}  // namespace cotrace::cli
