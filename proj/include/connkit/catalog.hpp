#pragma once

// Built-in fixture catalog.  The embedded texts are the source of truth for
// the files shipped under fixtures/; a test guards against drift.

#include <span>

namespace connkit {

struct FixtureEntry {
  const char* name;         // catalog key, also the fixtures/<name>.toml stem
  const char* description;  // one line
  const char* text;         // full config text
};

std::span<const FixtureEntry> fixture_catalog();

// nullptr when the name is not in the catalog.
const FixtureEntry* find_fixture(const char* name);

}  // namespace connkit
