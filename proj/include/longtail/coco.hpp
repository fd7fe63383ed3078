#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "longtail/bbox.hpp"

namespace longtail {

using Id = std::int64_t;

struct Annotation {
  Id id = 0;
  Id image_id = 0;
  Id category_id = 0;
  BBox bbox;
  bool iscrowd = false;

  bool operator==(const Annotation&) const = default;
};

struct ImageRecord {
  Id id = 0;
  std::string file_name;
  int width = 0;
  int height = 0;
  std::vector<Id> annotation_ids;  // ascending, exactly the annotations on this image

  bool operator==(const ImageRecord&) const = default;
};

// Ingest warning counters. Side information, not part of the structural model.
struct IngestStats {
  std::size_t clamped_boxes = 0;
  std::size_t dropped_boxes = 0;
};

// Validated in-memory dataset. Treat as immutable after construction; safe
// for concurrent reads. Crowd annotations (iscrowd=1) stay in `annotations`
// and in the owning image's annotation_ids but never appear in
// `images_by_category` or in any frequency count derived from it.
struct DatasetIndex {
  std::map<Id, ImageRecord> images;
  std::map<Id, Annotation> annotations;
  std::map<Id, std::string> categories;
  // One entry per category (possibly empty); lists are sorted ascending
  // and duplicate-free.
  std::map<Id, std::vector<Id>> images_by_category;
  IngestStats ingest;

  std::vector<Id> image_ids() const;
  std::vector<Id> category_ids() const;
};

// Equality on the structural model (ingest counters excluded).
bool structurally_equal(const DatasetIndex& a, const DatasetIndex& b);

// Rebuilds annotation_ids and images_by_category from `annotations`.
void reindex(DatasetIndex& index);

// Parses a COCO-style annotation document. Reads
// images[].{id,file_name,width,height}, annotations[].{id,image_id,
// category_id,bbox,iscrowd}, categories[].{id,name}; everything else is
// ignored. Boxes reaching past image bounds are clamped; boxes that clamp
// to zero width or height are dropped (both counted in `ingest`).
DatasetIndex parse_coco(std::string_view json_text);

// Checks every index invariant and returns one description per violation.
// Violations are data, not errors: an empty list means the index is clean.
std::vector<std::string> validate(const DatasetIndex& index);

// Serializes back to the COCO schema. Arrays are emitted in ascending id
// order with a fixed key order, so output bytes are deterministic and
// parse_coco(write_manifest(x)) is structurally equal to x.
std::string write_manifest(const DatasetIndex& index);

}  // namespace longtail
