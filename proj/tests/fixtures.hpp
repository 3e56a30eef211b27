#pragma once

// The 18-leaf tandem duplication tree used as a worked example, in the
// nested JSON form accepted by the CLI.
inline constexpr const char* example_tree_json =
    "[[[[[1,[3,4]],[6,7]],[[2,5],[8,10]]],[9,11]],[[12,13],[[[14,15],17],[16,18]]]]";
