#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kustab {

enum class ItemStatus { pass, fail, inconclusive };
std::string to_string(ItemStatus s);

struct VerificationItem {
  std::string id;
  std::string location;  ///< descriptive label of the checked claim
  std::vector<std::string> tags;
  ItemStatus status = ItemStatus::fail;
  std::string details;
};

/// Runs every reproduction item whose tags contain `filter` (all items when
/// empty). Items come back sorted by id.
std::vector<VerificationItem> verify_paper(const std::optional<std::string>& filter = std::nullopt);

/// Tags used by at least one item, sorted.
std::vector<std::string> verification_tags();

}  // namespace kustab
